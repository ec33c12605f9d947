//! Explicit irreducible representations from a faithful representation,
//! and the orthonormality checks in group space and class space.

use std::collections::VecDeque;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::{dot, is_zero_vec, Matrix};
use crate::repr::{central_projector, character_of, decompose, CharacterTable, Representation};
use crate::scalar::Scalar;
use crate::{QuadNumber, Rational};

/// One irrep per table row, in row order and named after the rows.
///
/// Irreps are found in the tensor closure of `defining`: each newly found
/// irrep is multiplied by `defining` and the product searched in turn.
pub fn construct_irreps(
    group: &Group<QuadNumber>,
    defining: &Representation,
    table: &CharacterTable,
) -> Result<Vec<Representation>> {
    if !defining.on_group(group) {
        return Err(Error::GroupMismatch);
    }
    if !defining.is_faithful() {
        return Err(Error::NotFaithful);
    }
    let orthogonal = defining.is_orthogonal();
    let k = table.rows.len();
    let mut found: Vec<Option<Representation>> = vec![None; k];
    let mut pending_failure = None;
    let mut queue = VecDeque::from([Representation::trivial(group), defining.clone()]);
    while let Some(rep) = queue.pop_front() {
        if found.iter().all(Option::is_some) {
            break;
        }
        let mult = decompose(&rep, table)?;
        for (j, &a) in mult.iter().enumerate() {
            if a == 0 || found[j].is_some() {
                continue;
            }
            match extract(&rep, table, j, a, orthogonal) {
                Ok(irrep) => {
                    queue.push_back(irrep.tensor(defining)?);
                    found[j] = Some(irrep);
                }
                Err(e @ Error::FieldExceeded(_)) => pending_failure = Some(e),
                Err(e) => return Err(e),
            }
        }
    }
    match found.into_iter().collect::<Option<Vec<_>>>() {
        Some(irreps) => Ok(irreps),
        None => Err(pending_failure.unwrap_or(Error::NotFaithful)),
    }
}

/// One irreducible block of type `row` inside `rep`, which contains it
/// `mult` times.
fn extract(
    rep: &Representation,
    table: &CharacterTable,
    row: usize,
    mult: usize,
    orthogonal: bool,
) -> Result<Representation> {
    let m = table.rows[row].degree();
    let p = central_projector(rep, table, row);
    let candidates: Vec<Vec<Vec<QuadNumber>>> = if mult == 1 {
        vec![p.column_basis()]
    } else {
        seed_vectors(rep.dim())
            .filter_map(|s| {
                let v = p.mul_vec(&s);
                (!is_zero_vec(&v)).then(|| orbit_span(rep, &v))
            })
            .filter(|b| b.len() == m)
            .take(1)
            .collect()
    };
    let Some(mut basis) = candidates.into_iter().next() else {
        return Err(Error::FieldExceeded(row));
    };
    if orthogonal {
        if let Some(ortho) = orthonormalise(&basis) {
            basis = ortho;
        }
    }
    let irrep = restrict(rep, &basis, &table.rows[row].rep_name)?;
    if character_of(&irrep, &table.classes)?.values != table.rows[row].values {
        return Err(Error::FieldExceeded(row));
    }
    Ok(irrep)
}

/// Standard basis vectors in index order, then pairwise sums.
pub fn seed_vectors(n: usize) -> impl Iterator<Item = Vec<QuadNumber>> {
    let unit = move |i: usize| {
        (0..n)
            .map(|k| if k == i { QuadNumber::one() } else { QuadNumber::zero() })
            .collect::<Vec<_>>()
    };
    let singles = (0..n).map(unit);
    let pairs = (0..n).flat_map(move |i| {
        (i + 1..n).map(move |j| {
            (0..n)
                .map(|k| {
                    if k == i || k == j {
                        QuadNumber::one()
                    } else {
                        QuadNumber::zero()
                    }
                })
                .collect()
        })
    });
    singles.chain(pairs)
}

/// Basis of the span of `{D(R) v}`.
fn orbit_span(rep: &Representation, v: &[QuadNumber]) -> Vec<Vec<QuadNumber>> {
    let images: Vec<Vec<QuadNumber>> = rep.matrices().iter().map(|d| d.mul_vec(v)).collect();
    Matrix::from_columns(&images).column_basis()
}

/// Gram-Schmidt followed by normalisation, when every norm has a square
/// root in the field.
pub fn orthonormalise(basis: &[Vec<QuadNumber>]) -> Option<Vec<Vec<QuadNumber>>> {
    let mut out: Vec<Vec<QuadNumber>> = Vec::with_capacity(basis.len());
    let mut norms: Vec<QuadNumber> = Vec::with_capacity(basis.len());
    for b in basis {
        let mut v = b.clone();
        for (u, nu) in out.iter().zip(&norms) {
            let c = dot(b, u) / nu.clone();
            for (x, y) in v.iter_mut().zip(u) {
                *x -= &c * y;
            }
        }
        let n = dot(&v, &v);
        if n.is_zero() {
            return None;
        }
        norms.push(n);
        out.push(v);
    }
    out.into_iter()
        .zip(norms)
        .map(|(v, n)| {
            let r: Rational = n.to_rational()?;
            let root = QuadNumber::sqrt_rational(&r).ok()?;
            let inv = root.inverse().ok()?;
            Some(v.iter().map(|x| x * &inv).collect())
        })
        .collect()
}

/// The representation on the invariant subspace spanned by `basis`:
/// `D'(R) = B_sub^-1 (D(R) B)_sub` over a set of independent rows of `B`.
pub fn restrict(rep: &Representation, basis: &[Vec<QuadNumber>], name: &str) -> Result<Representation> {
    let b = Matrix::from_columns(basis);
    let (_, rows) = b.transpose().rref();
    let cols: Vec<usize> = (0..b.ncols()).collect();
    let inv = b.submatrix(&rows, &cols).inverse()?;
    let mats = rep
        .matrices()
        .iter()
        .map(|d| inv.mul(&d.mul(&b).submatrix(&rows, &cols)))
        .collect();
    let out = rep.sibling(name, mats)?;
    if !out.is_homomorphism() {
        return Err(Error::NotHomomorphism(name.to_string()));
    }
    Ok(out)
}

/// Outcome of an orthonormality check.
#[derive(Clone, Debug)]
pub struct OrthoReport {
    /// The normalised matrix, when all square roots lie in the field.
    pub matrix: Option<Matrix<QuadNumber>>,
    pub row_labels: Vec<String>,
    pub rows_orthonormal: bool,
    pub columns_orthonormal: bool,
    /// Largest absolute deviation from the identity Gram matrix.
    pub max_deviation: QuadNumber,
}

impl OrthoReport {
    pub fn passed(&self) -> bool {
        self.rows_orthonormal && self.columns_orthonormal && self.max_deviation.is_zero()
    }
}

fn abs(x: &QuadNumber) -> QuadNumber {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}

fn track(max: &mut QuadNumber, dev: QuadNumber) -> bool {
    let a = abs(&dev);
    if (&a - &*max).signum_real() > 0 {
        *max = a;
    }
    dev.is_zero()
}

fn sqrt_ratio(num: usize, den: usize) -> Option<QuadNumber> {
    QuadNumber::sqrt_rational(&Rational::new((num as i64).into(), (den as i64).into())).ok()
}

/// `U_(i,u,v),R = sqrt(m_i/g) D^i_uv(R)`: orthonormal rows and columns.
///
/// The Gram sums are formed without square roots, so the check also works
/// when `U` itself has entries outside the field.
pub fn verify_group_space_orthonormality(irreps: &[Representation]) -> Result<OrthoReport> {
    let g = irreps
        .first()
        .map(|r| r.group_order())
        .ok_or(Error::IncompleteIrrepSet { found: 0, order: 0 })?;
    let total: usize = irreps.iter().map(|r| r.dim() * r.dim()).sum();
    if total != g {
        return Err(Error::IncompleteIrrepSet { found: total, order: g });
    }
    if irreps.iter().any(|r| !r.same_group(&irreps[0])) {
        return Err(Error::GroupMismatch);
    }
    let mut index = Vec::with_capacity(g);
    for (i, r) in irreps.iter().enumerate() {
        for u in 0..r.dim() {
            for v in 0..r.dim() {
                index.push((i, u, v));
            }
        }
    }
    let entry = |(i, u, v): (usize, usize, usize), x: usize| irreps[i].matrix(x)[(u, v)].clone();
    let weight = |i: usize| QuadNumber::from_ratio(irreps[i].dim() as i64, g as i64);

    let mut max = QuadNumber::zero();
    let mut rows_ok = true;
    for (a, &ra) in index.iter().enumerate() {
        for &rb in &index[a..] {
            let mut s = QuadNumber::zero();
            for x in 0..g {
                s += entry(ra, x) * entry(rb, x).conj();
            }
            let dev = if ra.0 == rb.0 {
                s * weight(ra.0) - QuadNumber::from(i64::from(ra == rb))
            } else {
                let scale = sqrt_ratio(irreps[ra.0].dim() * irreps[rb.0].dim(), g * g).unwrap_or_else(QuadNumber::one);
                s * scale
            };
            rows_ok &= track(&mut max, dev);
        }
    }
    let mut cols_ok = true;
    for x in 0..g {
        for y in x..g {
            let mut s = QuadNumber::zero();
            for &r in &index {
                s += weight(r.0) * entry(r, x) * entry(r, y).conj();
            }
            cols_ok &= track(&mut max, s - QuadNumber::from(i64::from(x == y)));
        }
    }
    let roots: Option<Vec<QuadNumber>> = irreps.iter().map(|r| sqrt_ratio(r.dim(), g)).collect();
    let matrix = roots.map(|roots| Matrix::from_fn(g, g, |a, x| &roots[index[a].0] * &entry(index[a], x)));
    let row_labels = index
        .iter()
        .map(|&(i, u, v)| format!("{}[{}{}]", irreps[i].name(), u + 1, v + 1))
        .collect();
    Ok(OrthoReport {
        matrix,
        row_labels,
        rows_orthonormal: rows_ok,
        columns_orthonormal: cols_ok,
        max_deviation: max,
    })
}

/// `V_j,a = sqrt(n(a)/g) chi^j_a`: orthonormal rows and columns.
pub fn verify_class_space_orthonormality(table: &CharacterTable) -> OrthoReport {
    let g = table.group_order;
    let sizes = table.class_sizes();
    let k = sizes.len();
    let chi = |j: usize, a: usize| table.rows[j].values[a].clone();
    let mut max = QuadNumber::zero();
    let mut rows_ok = true;
    for i in 0..k {
        for j in i..k {
            let mut s = QuadNumber::zero();
            for (a, &n) in sizes.iter().enumerate() {
                s += chi(i, a) * chi(j, a).conj() * QuadNumber::from_ratio(n as i64, g as i64);
            }
            rows_ok &= track(&mut max, s - QuadNumber::from(i64::from(i == j)));
        }
    }
    let mut cols_ok = true;
    for a in 0..k {
        for b in a..k {
            let mut s = QuadNumber::zero();
            for j in 0..k {
                s += chi(j, a).conj() * chi(j, b);
            }
            let dev = if a == b {
                s * QuadNumber::from_ratio(sizes[a] as i64, g as i64) - QuadNumber::one()
            } else {
                let scale = sqrt_ratio(sizes[a] * sizes[b], g * g).unwrap_or_else(QuadNumber::one);
                s * scale
            };
            cols_ok &= track(&mut max, dev);
        }
    }
    let roots: Option<Vec<QuadNumber>> = sizes.iter().map(|&n| sqrt_ratio(n, g)).collect();
    let matrix = roots.map(|roots| Matrix::from_fn(k, k, |j, a| &roots[a] * &chi(j, a)));
    let row_labels = table.rows.iter().map(|r| r.rep_name.clone()).collect();
    OrthoReport {
        matrix,
        row_labels,
        rows_orthonormal: rows_ok,
        columns_orthonormal: cols_ok,
        max_deviation: max,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::{character_table, name_rows_from};
    use crate::fixture::{parse_fixture_row, td_group, td_irreps, TD_CLASS_SPACE, TD_GROUP_SPACE};
    use crate::group::{GroupElement, Permutation, DEFAULT_MAX_ORDER};

    fn td_setup() -> (Group<QuadNumber>, CharacterTable) {
        let g = td_group();
        let mut t = character_table(&g).unwrap();
        name_rows_from(&mut t, &td_irreps()).unwrap();
        (g, t)
    }

    #[test]
    fn td_irreps_from_defining() {
        let (g, t) = td_setup();
        let def = Representation::defining(&g);
        let irreps = construct_irreps(&g, &def, &t).unwrap();
        let dims: Vec<usize> = irreps.iter().map(Representation::dim).collect();
        assert_eq!(dims, [1, 1, 2, 3, 3]);
        for (rep, row) in irreps.iter().zip(&t.rows) {
            assert!(rep.is_homomorphism());
            assert!(rep.is_orthogonal(), "{}", rep.name());
            assert_eq!(character_of(rep, &t.classes).unwrap().values, row.values);
            assert_eq!(rep.name(), row.rep_name);
        }
        assert_eq!(irreps[3].matrices(), def.matrices());
    }

    #[test]
    fn trivial_group() {
        let g = Group::<QuadNumber>::close_generators(
            &[GroupElement::Permutation(Permutation::identity(2))],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        let t = character_table(&g).unwrap();
        let irreps = construct_irreps(&g, &Representation::defining(&g), &t).unwrap();
        assert_eq!(irreps.len(), 1);
        let report = verify_group_space_orthonormality(&irreps).unwrap();
        assert_eq!(report.matrix.unwrap(), Matrix::identity(1));
        assert_eq!(
            verify_class_space_orthonormality(&t).matrix.unwrap(),
            Matrix::identity(1)
        );
    }

    #[test]
    fn unfaithful_defining() {
        let (g, t) = td_setup();
        let triv = Representation::trivial(&g);
        assert_eq!(construct_irreps(&g, &triv, &t).unwrap_err(), Error::NotFaithful);
    }

    #[test]
    fn repeated_components_use_cyclic_modules() {
        let g = Group::<QuadNumber>::close_generators(
            &[
                GroupElement::Permutation(Permutation::from_cycles("(0 1 2)(3 4 5)", 6).unwrap()),
                GroupElement::Permutation(Permutation::from_cycles("(0 1)(3 4)", 6).unwrap()),
            ],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        let t = character_table(&g).unwrap();
        let def = Representation::defining(&g);
        assert_eq!(decompose(&def, &t).unwrap(), [2, 0, 2]);
        let irreps = construct_irreps(&g, &def, &t).unwrap();
        assert_eq!(irreps.iter().map(Representation::dim).collect::<Vec<_>>(), [1, 1, 2]);
        assert!(verify_group_space_orthonormality(&irreps).is_ok());
    }

    #[test]
    fn quaternion_irrep_leaves_the_field() {
        let q8 = &crate::iso::catalog().iter().find(|e| e.name == "Q8").unwrap().group;
        let t = character_table(q8).unwrap();
        let def = Representation::defining(q8);
        assert!(matches!(construct_irreps(q8, &def, &t), Err(Error::FieldExceeded(4))));
    }

    #[test]
    fn group_space_fixture() {
        let irreps = td_irreps();
        let report = verify_group_space_orthonormality(&irreps).unwrap();
        assert!(report.passed());
        let u = report.matrix.unwrap();
        for (row, label) in report.row_labels.iter().enumerate() {
            let (name, u_, v_, values) = TD_GROUP_SPACE[row];
            assert_eq!(*label, format!("{name}[{u_}{v_}]"));
            let expected = parse_fixture_row(values);
            if name == "B" {
                // the printed B row has +1/sqrt(24) on the twelve improper
                // elements; orthogonality to row A forces the minus sign
                let differs: Vec<usize> = (0..24).filter(|&x| u[(row, x)] != expected[x]).collect();
                assert_eq!(differs, (12..24).collect::<Vec<_>>());
                assert!(differs.iter().all(|&x| u[(row, x)] == -expected[x].clone()));
                continue;
            }
            assert_eq!(u.row(row), expected.as_slice(), "{label}");
        }
    }

    #[test]
    fn incomplete_set() {
        let mut irreps = td_irreps();
        irreps.remove(2);
        assert_eq!(
            verify_group_space_orthonormality(&irreps).unwrap_err(),
            Error::IncompleteIrrepSet { found: 20, order: 24 }
        );
        let mut irreps = td_irreps();
        irreps.remove(1);
        assert_eq!(
            verify_group_space_orthonormality(&irreps).unwrap_err(),
            Error::IncompleteIrrepSet { found: 23, order: 24 }
        );
    }

    #[test]
    fn class_space_fixture() {
        let (_, t) = td_setup();
        let report = verify_class_space_orthonormality(&t);
        assert!(report.passed());
        let v = report.matrix.unwrap();
        for (j, (name, values)) in TD_CLASS_SPACE.iter().enumerate() {
            assert_eq!(t.rows[j].rep_name, *name);
            let expected: Vec<QuadNumber> = values.iter().map(|s| s.parse().unwrap()).collect();
            assert_eq!(v.row(j), expected.as_slice());
        }
        let ab: QuadNumber = v
            .row(0)
            .iter()
            .zip(v.row(1))
            .map(|(a, b)| a * b)
            .fold(QuadNumber::zero(), |s, x| s + x);
        assert!(ab.is_zero());
    }

    #[test]
    fn broken_irrep_is_reported() {
        let mut irreps = td_irreps();
        let g = td_group();
        let bad: Vec<Matrix<QuadNumber>> = (0..24).map(|_| Matrix::identity(1)).collect();
        irreps[1] = Representation::new(&g, "B", bad).unwrap();
        let report = verify_group_space_orthonormality(&irreps).unwrap();
        assert!(!report.rows_orthonormal);
        assert!(!report.max_deviation.is_zero());
    }
}
