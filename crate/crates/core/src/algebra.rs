//! The group algebra: sparse elements, the irreducible basis `P^i_uv`,
//! primitive idempotents and the minimal left, right and two-sided ideals.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::Matrix;
use crate::repr::Representation;
use crate::scalar::Scalar;
use crate::QuadNumber;

/// `sum_R x[R] R`; absent indices have coefficient zero.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<S = QuadNumber> {
    order: usize,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(order: usize) -> Self {
        AlgebraElement {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element of group element `i`.
    pub fn delta(order: usize, i: usize) -> Self {
        let mut x = Self::zero(order);
        x.coeffs.insert(i, S::one());
        x
    }

    pub fn from_dense(values: &[S]) -> Self {
        let coeffs = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        AlgebraElement {
            order: values.len(),
            coeffs,
        }
    }

    pub fn to_dense(&self) -> Vec<S> {
        (0..self.order).map(|i| self.coefficient(i)).collect()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, i: usize) -> S {
        self.coeffs.get(&i).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().map(|(&i, v)| (i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn accumulate(&mut self, i: usize, v: S) {
        if v.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(i).or_insert_with(S::zero);
        *slot += v;
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.clone();
        for (&i, v) in &other.coeffs {
            out.accumulate(i, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.order);
        for (&i, v) in &self.coeffs {
            out.accumulate(i, v.clone() * c);
        }
        out
    }

    /// `(xy)[p] = sum_{s r = p} x[s] y[r]`.
    pub fn convolve<T: Scalar>(&self, other: &Self, group: &Group<T>) -> Result<Self> {
        if self.order != other.order || self.order != group.order() {
            return Err(Error::GroupMismatch);
        }
        let mut out = Self::zero(self.order);
        for (&s, x) in &self.coeffs {
            for (&r, y) in &other.coeffs {
                out.accumulate(group.mul(s, r), x.clone() * y);
            }
        }
        Ok(out)
    }

    /// Terms as `coefficient*label` in element order.
    pub fn display_with<T: Scalar>(&self, group: &Group<T>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (&i, v)) in self.coeffs.iter().enumerate() {
            let text = v.to_string();
            let term = if v.is_one() {
                group.label(i).to_string()
            } else if (-v.clone()).is_one() {
                format!("-{}", group.label(i))
            } else if text[1..].contains(" + ") || text[1..].contains(" - ") {
                format!("({text})*{}", group.label(i))
            } else {
                format!("{text}*{}", group.label(i))
            };
            match (k, term.strip_prefix('-')) {
                (0, _) => out.push_str(&term),
                (_, Some(rest)) => {
                    let _ = write!(out, " - {rest}");
                }
                (_, None) => {
                    let _ = write!(out, " + {term}");
                }
            }
        }
        out
    }
}

/// One member `P^i_uv` of the irreducible basis, indices from 0.
#[derive(Clone, Debug)]
pub struct BasisEntry<S = QuadNumber> {
    pub irrep: usize,
    pub name: String,
    pub u: usize,
    pub v: usize,
    pub element: AlgebraElement<S>,
}

/// The family `P^i_uv` over all irreps and index pairs.
#[derive(Clone, Debug)]
pub struct IrreducibleBasis<S = QuadNumber> {
    pub dims: Vec<usize>,
    pub names: Vec<String>,
    pub entries: Vec<BasisEntry<S>>,
}

impl<S: Scalar> IrreducibleBasis<S> {
    pub fn get(&self, i: usize, u: usize, v: usize) -> &AlgebraElement<S> {
        let offset: usize = self.dims[..i].iter().map(|m| m * m).sum();
        &self.entries[offset + u * self.dims[i] + v].element
    }

    pub fn order(&self) -> usize {
        self.entries.first().map(|e| e.element.order()).unwrap_or(0)
    }

    /// `P^i = sum_u P^i_uu`.
    pub fn central_idempotent(&self, i: usize) -> AlgebraElement<S> {
        (0..self.dims[i]).fold(AlgebraElement::zero(self.order()), |acc, u| {
            acc.add(self.get(i, u, u)).unwrap()
        })
    }
}

/// `P^i_uv = (m_i/g) sum_R D^i_vu(R^-1) R`, which for orthogonal irreps is
/// `(m_i/g) sum_R conj(D^i_uv(R)) R`.
pub fn irreducible_basis<S: Scalar>(irreps: &[Representation<S>]) -> Result<IrreducibleBasis<S>> {
    let g = irreps.first().map(|r| r.group_order()).unwrap_or(0);
    let total: usize = irreps.iter().map(|r| r.dim() * r.dim()).sum();
    if irreps.is_empty() || total != g {
        return Err(Error::IncompleteIrrepSet { found: total, order: g });
    }
    let mut entries = Vec::with_capacity(g);
    for (i, d) in irreps.iter().enumerate() {
        let m = d.dim();
        let factor = S::from_ratio(m as i64, g as i64);
        for u in 0..m {
            for v in 0..m {
                let dense: Vec<S> = (0..g)
                    .map(|r| d.matrix(d.inverse_index(r))[(v, u)].clone() * &factor)
                    .collect();
                entries.push(BasisEntry {
                    irrep: i,
                    name: d.name().to_string(),
                    u,
                    v,
                    element: AlgebraElement::from_dense(&dense),
                });
            }
        }
    }
    Ok(IrreducibleBasis {
        dims: irreps.iter().map(|r| r.dim()).collect(),
        names: irreps.iter().map(|r| r.name().to_string()).collect(),
        entries,
    })
}

/// Outcome of checking the four basis laws.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawsReport {
    pub pairs_checked: usize,
    /// Products `P^i_uv P^i_vl` that differ from `P^i_ul`.
    pub transitivity_failures: usize,
    /// Products that should vanish but do not.
    pub orthogonality_failures: usize,
    pub idempotence_failures: usize,
    /// `sum P^i_uu` equals the identity.
    pub completeness: bool,
    /// The family spans the algebra.
    pub spans: bool,
}

impl LawsReport {
    pub fn passed(&self) -> bool {
        self.transitivity_failures == 0
            && self.orthogonality_failures == 0
            && self.idempotence_failures == 0
            && self.completeness
            && self.spans
    }
}

pub fn verify_basis_laws<S: Scalar, T: Scalar>(basis: &IrreducibleBasis<S>, group: &Group<T>) -> Result<LawsReport> {
    let g = basis.order();
    let mut report = LawsReport::default();
    for a in &basis.entries {
        for b in &basis.entries {
            let product = a.element.convolve(&b.element, group)?;
            report.pairs_checked += 1;
            if a.irrep == b.irrep && a.v == b.u {
                if &product != basis.get(a.irrep, a.u, b.v) {
                    report.transitivity_failures += 1;
                }
            } else if !product.is_zero() {
                report.orthogonality_failures += 1;
            }
        }
        if a.u == a.v && a.element.convolve(&a.element, group)? != a.element {
            report.idempotence_failures += 1;
        }
    }
    let sum = basis
        .entries
        .iter()
        .filter(|e| e.u == e.v)
        .try_fold(AlgebraElement::zero(g), |acc, e| acc.add(&e.element))?;
    report.completeness = sum == AlgebraElement::delta(g, 0);
    let rows: Vec<Vec<S>> = basis.entries.iter().map(|e| e.element.to_dense()).collect();
    report.spans = Matrix::from_rows(rows).rank() == g;
    Ok(report)
}

/// An ideal as the row-reduced span of generating elements.
#[derive(Clone, Debug)]
pub struct Ideal<S = QuadNumber> {
    pub irrep: usize,
    pub name: String,
    /// Index of the idempotent for one-sided ideals.
    pub index: Option<usize>,
    pub basis: Vec<AlgebraElement<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Ideal<S> {
    fn spanned_by(irrep: usize, name: &str, index: Option<usize>, generators: Vec<AlgebraElement<S>>) -> Self {
        let rows: Vec<Vec<S>> = generators.iter().map(AlgebraElement::to_dense).collect();
        let (r, pivots) = Matrix::from_rows(rows).rref();
        let basis = (0..pivots.len())
            .map(|k| AlgebraElement::from_dense(r.row(k)))
            .collect();
        Ideal {
            irrep,
            name: name.to_string(),
            index,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates in the reduced basis, if `x` lies in the span.
    pub fn coordinates(&self, x: &AlgebraElement<S>) -> Option<Vec<S>> {
        let coords: Vec<S> = self.pivots.iter().map(|&p| x.coefficient(p)).collect();
        let rebuilt = self
            .basis
            .iter()
            .zip(&coords)
            .fold(AlgebraElement::zero(x.order()), |acc, (b, c)| {
                acc.add(&b.scale(c)).unwrap()
            });
        (&rebuilt == x).then_some(coords)
    }

    pub fn contains(&self, x: &AlgebraElement<S>) -> bool {
        self.coordinates(x).is_some()
    }
}

/// Minimal left and right ideals, simple two-sided ideals and the central
/// idempotents.
#[derive(Clone, Debug)]
pub struct IdealDecomposition<S = QuadNumber> {
    pub left: Vec<Ideal<S>>,
    pub right: Vec<Ideal<S>>,
    pub bilateral: Vec<Ideal<S>>,
    pub central: Vec<AlgebraElement<S>>,
}

/// `L^i_v = A P^i_vv`, `R^i_u = P^i_uu A` and `B^i = A P^i`.
pub fn ideals<S: Scalar, T: Scalar>(basis: &IrreducibleBasis<S>, group: &Group<T>) -> Result<IdealDecomposition<S>> {
    let g = basis.order();
    let deltas: Vec<AlgebraElement<S>> = (0..g).map(|s| AlgebraElement::delta(g, s)).collect();
    let mut out = IdealDecomposition {
        left: vec![],
        right: vec![],
        bilateral: vec![],
        central: vec![],
    };
    for (i, name) in basis.names.iter().enumerate() {
        for v in 0..basis.dims[i] {
            let p = basis.get(i, v, v);
            let left = deltas
                .iter()
                .map(|d| d.convolve(p, group))
                .collect::<Result<Vec<_>>>()?;
            out.left.push(Ideal::spanned_by(i, name, Some(v), left));
            let right = deltas
                .iter()
                .map(|d| p.convolve(d, group))
                .collect::<Result<Vec<_>>>()?;
            out.right.push(Ideal::spanned_by(i, name, Some(v), right));
        }
        let c = basis.central_idempotent(i);
        let two_sided = deltas
            .iter()
            .map(|d| d.convolve(&c, group))
            .collect::<Result<Vec<_>>>()?;
        out.bilateral.push(Ideal::spanned_by(i, name, None, two_sided));
        out.central.push(c);
    }
    Ok(out)
}

/// `delta_s x` stays in the ideal for every `s` and basis vector `x`.
pub fn is_left_invariant<S: Scalar, T: Scalar>(ideal: &Ideal<S>, group: &Group<T>) -> Result<bool> {
    let g = group.order();
    for s in 0..g {
        let d = AlgebraElement::delta(g, s);
        for x in &ideal.basis {
            if !ideal.contains(&d.convolve(x, group)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `x delta_s` stays in the ideal for every `s` and basis vector `x`.
pub fn is_right_invariant<S: Scalar, T: Scalar>(ideal: &Ideal<S>, group: &Group<T>) -> Result<bool> {
    let g = group.order();
    for s in 0..g {
        let d = AlgebraElement::delta(g, s);
        for x in &ideal.basis {
            if !ideal.contains(&x.convolve(&d, group)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Trace of left multiplication by each group element on the ideal.
pub fn left_action_traces<S: Scalar, T: Scalar>(ideal: &Ideal<S>, group: &Group<T>) -> Result<Vec<S>> {
    let g = group.order();
    (0..g)
        .map(|s| {
            let d = AlgebraElement::delta(g, s);
            let mut trace = S::zero();
            for (k, x) in ideal.basis.iter().enumerate() {
                let image = d.convolve(x, group)?;
                let coords = ideal
                    .coordinates(&image)
                    .ok_or_else(|| Error::NotHomomorphism(format!("left action leaves ideal {}", ideal.name)))?;
                trace += coords[k].clone();
            }
            Ok(trace)
        })
        .collect()
}

/// Central idempotents commute with every group element, are pairwise
/// orthogonal idempotents and sum to the identity.
pub fn central_idempotents_ok<S: Scalar, T: Scalar>(central: &[AlgebraElement<S>], group: &Group<T>) -> Result<bool> {
    let g = group.order();
    for c in central {
        for s in 0..g {
            let d = AlgebraElement::delta(g, s);
            if d.convolve(c, group)? != c.convolve(&d, group)? {
                return Ok(false);
            }
        }
    }
    for (i, a) in central.iter().enumerate() {
        for (j, b) in central.iter().enumerate() {
            let p = a.convolve(b, group)?;
            if (i == j && &p != a) || (i != j && !p.is_zero()) {
                return Ok(false);
            }
        }
    }
    let sum = central.iter().try_fold(AlgebraElement::zero(g), |acc, c| acc.add(c))?;
    Ok(sum == AlgebraElement::delta(g, 0))
}
