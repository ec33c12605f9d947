//! Clebsch-Gordan series and transforms, and the reduction of the regular
//! and intrinsic regular representations.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{Group, Permutation};
use crate::irreps::seed_vectors;
use crate::linalg::{is_zero_vec, Matrix};
use crate::repr::{CharacterTable, Representation};
use crate::scalar::Scalar;
use crate::{QuadNumber, Rational};

/// `a_J = (1/g) sum_a n(a) conj(chi^J_a) chi^j_a chi^k_a`.
pub fn cg_series(table: &CharacterTable, left: usize, right: usize) -> Result<Vec<usize>> {
    let product: Vec<QuadNumber> = table.rows[left]
        .values
        .iter()
        .zip(&table.rows[right].values)
        .map(|(a, b)| a * b)
        .collect();
    table.multiplicities(&product)
}

/// A Clebsch-Gordan transform `C` with `C^-1 (D^j x D^k) C` block diagonal.
#[derive(Clone, Debug)]
pub struct CgDecomposition {
    pub left: String,
    pub right: String,
    pub series: Vec<usize>,
    pub matrix: Matrix<QuadNumber>,
    /// `(irrep name, copy index)` per diagonal block, in column order.
    pub block_layout: Vec<(String, usize)>,
}

/// `P_uv = (m/g) sum_R D_vu(R^-1) M(R)` for one irrep `d`.
fn projector(rep: &Representation, d: &Representation, u: usize, v: usize) -> Matrix<QuadNumber> {
    let n = rep.dim();
    let g = rep.group_order();
    let mut acc = Matrix::zeros(n, n);
    for r in 0..g {
        let c = &d.matrix(d.inverse_index(r))[(v, u)];
        if !c.is_zero() {
            acc = acc.add(&rep.matrix(r).scale(c));
        }
    }
    acc.scale(&QuadNumber::from_ratio(d.dim() as i64, g as i64))
}

/// Flips a block so that the first nonzero entry of its first column is
/// positive.
fn canonical_sign(block: &mut [Vec<QuadNumber>]) {
    let negative = block[0].iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if negative {
        for col in block.iter_mut() {
            for x in col.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Builds `C` for `left x right` column block by column block: for each
/// irrep in table order and each copy, the columns are `P_u1 x` for the
/// first seed `x` giving a new independent block.
pub fn cg_matrix(
    left: &Representation,
    right: &Representation,
    irreps: &[Representation],
    table: &CharacterTable,
) -> Result<CgDecomposition> {
    let li = table.row_index(left.name())?;
    let ri = table.row_index(right.name())?;
    let series = cg_series(table, li, ri)?;
    let product = left.tensor(right)?;
    let n = product.dim();
    let mut columns: Vec<Vec<QuadNumber>> = Vec::with_capacity(n);
    let mut layout = Vec::new();
    for (j, &a) in series.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let d = &irreps[j];
        if !d.same_group(&product) {
            return Err(Error::GroupMismatch);
        }
        let projectors: Vec<Matrix<QuadNumber>> = (0..d.dim()).map(|u| projector(&product, d, u, 0)).collect();
        let mut copies = 0;
        for seed in seed_vectors(n) {
            if copies == a {
                break;
            }
            let first = projectors[0].mul_vec(&seed);
            if is_zero_vec(&first) {
                continue;
            }
            let mut block: Vec<Vec<QuadNumber>> = projectors.iter().map(|p| p.mul_vec(&seed)).collect();
            let mut trial = columns.clone();
            trial.extend(block.iter().cloned());
            if Matrix::from_columns(&trial).rank() != trial.len() {
                continue;
            }
            canonical_sign(&mut block);
            columns.extend(block);
            layout.push((d.name().to_string(), copies));
            copies += 1;
        }
        if copies < a {
            return Err(Error::SingularTransform);
        }
    }
    let matrix = Matrix::from_columns(&columns);
    let layout_irreps: Vec<&Representation> = layout
        .iter()
        .map(|(name, _)| irreps.iter().find(|r| r.name() == name).unwrap())
        .collect();
    if !intertwines(&product, &matrix, &layout_irreps)? {
        return Err(Error::SingularTransform);
    }
    Ok(CgDecomposition {
        left: left.name().to_string(),
        right: right.name().to_string(),
        series,
        matrix,
        block_layout: layout,
    })
}

/// `M(R) C = C (D^1(R) + D^2(R) + ...)` for every element, with `C`
/// invertible.
pub fn intertwines(rep: &Representation, c: &Matrix<QuadNumber>, blocks: &[&Representation]) -> Result<bool> {
    let total: usize = blocks.iter().map(|b| b.dim()).sum();
    if total != rep.dim() || c.nrows() != rep.dim() || c.ncols() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            found: total,
        });
    }
    if c.determinant().is_zero() {
        return Err(Error::SingularTransform);
    }
    Ok((0..rep.group_order()).all(|r| {
        let diag: Vec<&Matrix<QuadNumber>> = blocks.iter().map(|b| b.matrix(r)).collect();
        rep.matrix(r).mul(c) == c.mul(&Matrix::direct_sum(&diag))
    }))
}

/// Per-column factors `s` such that `C diag(s)` satisfies the CG identity
/// exactly; `None` when no such scaling exists.
pub fn cg_scaling(
    rep: &Representation,
    c: &Matrix<QuadNumber>,
    blocks: &[&Representation],
) -> Result<Option<Vec<QuadNumber>>> {
    let n = rep.dim();
    let inv = c.inverse().map_err(|_| Error::SingularTransform)?;
    let k: Vec<Matrix<QuadNumber>> = rep.matrices().iter().map(|m| inv.mul(&m.mul(c))).collect();
    let mut scale = vec![QuadNumber::zero(); n];
    let mut offset = 0;
    for b in blocks {
        let m = b.dim();
        scale[offset] = QuadNumber::one();
        let mut known = vec![false; m];
        known[0] = true;
        let mut progress = true;
        while progress {
            progress = false;
            for u in 0..m {
                for v in 0..m {
                    if !known[u] || known[v] {
                        continue;
                    }
                    let hit = (0..k.len())
                        .find(|&r| !k[r][(offset + u, offset + v)].is_zero() && !b.matrix(r)[(u, v)].is_zero());
                    if let Some(r) = hit {
                        let ratio = &b.matrix(r)[(u, v)] / &k[r][(offset + u, offset + v)];
                        scale[offset + v] = &scale[offset + u] * &ratio;
                        known[v] = true;
                        progress = true;
                    }
                }
            }
        }
        if known.iter().any(|&x| !x) {
            return Ok(None);
        }
        offset += m;
    }
    let s = Matrix::from_fn(n, n, |i, j| if i == j { scale[i].clone() } else { QuadNumber::zero() });
    let scaled = c.mul(&s);
    Ok(intertwines(rep, &scaled, blocks)?.then_some(scale))
}

/// Which regular representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularKind {
    /// `D(S)_PR = 1` iff `P = S R`.
    Regular,
    /// `D(S)_RP = 1` iff `P = R S`.
    Intrinsic,
}

/// The regular or intrinsic regular representation, stored as
/// permutations of the element indices.
#[derive(Clone, Debug)]
pub struct RegularRep {
    pub kind: RegularKind,
    pub permutations: Vec<Permutation>,
}

pub fn regular_representation<S: Scalar>(group: &Group<S>, kind: RegularKind) -> RegularRep {
    let n = group.order();
    let permutations = (0..n)
        .map(|s| {
            let images = match kind {
                RegularKind::Regular => (0..n).map(|r| group.mul(s, r)).collect(),
                RegularKind::Intrinsic => (0..n).map(|q| group.mul(q, group.inverse(s))).collect(),
            };
            Permutation::from_images(images).expect("group table row is a permutation")
        })
        .collect();
    RegularRep { kind, permutations }
}

impl RegularRep {
    pub fn matrix(&self, s: usize) -> Matrix<QuadNumber> {
        self.permutations[s].to_matrix()
    }

    pub fn to_representation<S: Scalar>(&self, group: &Group<S>) -> Result<Representation> {
        let mats = (0..self.permutations.len()).map(|s| self.matrix(s)).collect();
        Representation::new_unchecked(group, "regular", mats)
    }
}

/// The reduction `X` with `X^-1 D(S) X` block diagonal: column `(i, c, k)`
/// has entry `(m_i/g) D^i_ck(R^-1)` in row `R` for the regular
/// representation and `(m_i/g) D^i_ck(R)` for the intrinsic one. With
/// `normalized` the factor is `sqrt(m_i/g)` instead.
pub fn regular_reduction(
    regular: &RegularRep,
    irreps: &[Representation],
    normalized: bool,
) -> Result<Matrix<QuadNumber>> {
    let g = regular.permutations.len();
    let total: usize = irreps.iter().map(|r| r.dim() * r.dim()).sum();
    if total != g {
        return Err(Error::IncompleteIrrepSet { found: total, order: g });
    }
    let mut columns = Vec::with_capacity(g);
    for d in irreps {
        let m = d.dim();
        let ratio = Rational::new((m as i64).into(), (g as i64).into());
        let factor = if normalized {
            QuadNumber::sqrt_rational(&ratio)?
        } else {
            QuadNumber::from_rational(ratio)
        };
        for c in 0..m {
            for k in 0..m {
                columns.push(
                    (0..g)
                        .map(|r| {
                            let x = match regular.kind {
                                RegularKind::Regular => d.inverse_index(r),
                                RegularKind::Intrinsic => r,
                            };
                            &factor * &d.matrix(x)[(c, k)]
                        })
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    Ok(Matrix::from_columns(&columns))
}

/// `D(S) X = X B(S)` for every `S`, where `B(S)` repeats each irrep `m_i`
/// times.
pub fn verify_regular_reduction(
    regular: &RegularRep,
    irreps: &[Representation],
    x: &Matrix<QuadNumber>,
) -> Result<bool> {
    if x.determinant().is_zero() {
        return Err(Error::SingularTransform);
    }
    let g = regular.permutations.len();
    Ok((0..g).all(|s| {
        let perm = &regular.permutations[s];
        let inv = perm.inverse();
        // row P of D(S) X is row p^-1(P) of X
        let lhs = Matrix::from_fn(g, g, |p, c| x[(inv.apply(p), c)].clone());
        let blocks: Vec<&Matrix<QuadNumber>> = irreps
            .iter()
            .flat_map(|d| std::iter::repeat_n(d.matrix(s), d.dim()))
            .collect();
        lhs == x.mul(&Matrix::direct_sum(&blocks))
    }))
}

/// Regular and intrinsic regular matrices commute for every pair.
pub fn regular_commute<S: Scalar>(group: &Group<S>) -> bool {
    let reg = regular_representation(group, RegularKind::Regular);
    let int = regular_representation(group, RegularKind::Intrinsic);
    reg.permutations
        .iter()
        .all(|a| int.permutations.iter().all(|b| a.compose(b) == b.compose(a)))
}
