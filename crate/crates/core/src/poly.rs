//! Polynomials in x, y, z, the action `(R p)(r) = p(R^-1 r)`, and symmetry
//! adapted function bases built with projection operators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::Matrix;
use crate::repr::Representation;
use crate::scalar::Scalar;

/// Exponents of x, y and z.
pub type Monomial = [u32; 3];

/// Sparse polynomial; no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Default for Polynomial<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    /// `x`, `y` or `z` for `var` 0, 1 or 2.
    pub fn variable(var: usize) -> Self {
        let mut e = [0; 3];
        e[var] = 1;
        Self::monomial(e, S::one())
    }

    pub fn monomial(exps: Monomial, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    fn add_term(&mut self, exps: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(S::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: Monomial) -> Option<&S> {
        self.terms.get(&exps)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    /// Total degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, v)| (*e, v.clone() * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(S::one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[S; 3]) -> S {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `x_k -> forms[k]`.
    pub fn substitute(&self, forms: &[Polynomial<S>; 3]) -> Self {
        let mut cache: HashMap<(usize, u32), Polynomial<S>> = HashMap::new();
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (k, &n) in e.iter().enumerate() {
                if n > 0 {
                    let power = cache.entry((k, n)).or_insert_with(|| forms[k].pow(n));
                    t = &t * power;
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x.clone() * y);
            }
        }
        out
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        Polynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        &self * &rhs
    }
}

fn monomial_text(e: &Monomial) -> String {
    let parts: Vec<String> = ["x", "y", "z"]
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect();
    parts.join("*")
}

/// Descending total degree, then descending exponents of x, y, z.
impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<(&Monomial, &S)> = self.terms.iter().collect();
        order.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then(b.0.cmp(a.0))
        });
        for (i, (e, c)) in order.into_iter().enumerate() {
            let coeff = c.to_string();
            let mono = monomial_text(e);
            let term = if mono.is_empty() {
                coeff
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else if coeff[1..].contains(" + ") || coeff[1..].contains(" - ") {
                format!("({coeff})*{mono}")
            } else {
                format!("{coeff}*{mono}")
            };
            match (i, term.strip_prefix('-')) {
                (0, _) => write!(f, "{term}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

/// `(R p)(r) = p(R^-1 r)` for a 3x3 matrix `R`.
pub fn act<S: Scalar>(r: &Matrix<S>, p: &Polynomial<S>) -> Result<Polynomial<S>> {
    if r.nrows() != 3 || r.ncols() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: r.nrows(),
        });
    }
    let inv = r.inverse()?;
    let forms: [Polynomial<S>; 3] = std::array::from_fn(|k| {
        let mut f = Polynomial::zero();
        for l in 0..3 {
            f.add_term(
                {
                    let mut e = [0; 3];
                    e[l] = 1;
                    e
                },
                inv[(k, l)].clone(),
            );
        }
        f
    });
    Ok(p.substitute(&forms))
}

fn element_matrix<S: Scalar>(group: &Group<S>, i: usize) -> Result<&Matrix<S>> {
    group.element(i).as_matrix().ok_or(Error::MixedKind)
}

/// `P_uv p = (m/g) sum_R D_vu(R^-1) (R p)`, indices from 0.
pub fn project<S: Scalar>(
    group: &Group<S>,
    irrep: &Representation<S>,
    u: usize,
    v: usize,
    p: &Polynomial<S>,
) -> Result<Polynomial<S>> {
    if !irrep.on_group(group) {
        return Err(Error::GroupMismatch);
    }
    let m = irrep.dim();
    if u >= m || v >= m {
        return Err(Error::IndexOutOfRange(u.max(v)));
    }
    let mut acc = Polynomial::zero();
    for r in 0..group.order() {
        let c = irrep.matrix(irrep.inverse_index(r))[(v, u)].clone();
        if c.is_zero() {
            continue;
        }
        acc = &acc + &act(element_matrix(group, r)?, p)?.scale(&c);
    }
    Ok(acc.scale(&S::from_ratio(m as i64, group.order() as i64)))
}

/// `[P_1v seed, ..., P_mv seed]` for the first `v` giving a nonzero
/// `P_1v seed`.
pub fn function_basis<S: Scalar>(
    group: &Group<S>,
    irrep: &Representation<S>,
    seed: &Polynomial<S>,
) -> Result<Vec<Polynomial<S>>> {
    for v in 0..irrep.dim() {
        let first = project(group, irrep, 0, v, seed)?;
        if first.is_zero() {
            continue;
        }
        let mut basis = vec![first];
        for u in 1..irrep.dim() {
            basis.push(project(group, irrep, u, v, seed)?);
        }
        return Ok(basis);
    }
    Err(Error::SeedHasNoComponent(irrep.name().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::{td_group, td_irreps};
    use crate::parse::parse_polynomial;
    use crate::QuadNumber;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial<QuadNumber> {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn display() {
        assert_eq!(p("(x+y+z)^2").to_string(), "x^2 + 2*x*y + 2*x*z + y^2 + 2*y*z + z^2");
        assert_eq!(p("x - 3*y + 1/2").to_string(), "x - 3*y + 1/2");
        assert_eq!(p("-x*z").to_string(), "-x*z");
        assert_eq!(p("(1 + sqrt(2))*x").to_string(), "(1 + sqrt(2))*x");
        assert_eq!(Polynomial::<QuadNumber>::zero().to_string(), "0");
    }

    #[test]
    fn action_on_square() {
        let g = td_group();
        let ty = g.element(g.index_of("Ty2").unwrap()).as_matrix().unwrap();
        assert_eq!(act(ty, &p("(x+y+z)^2")).unwrap(), p("(-x+y-z)^2"));
    }

    #[test]
    fn td_square_basis() {
        let g = td_group();
        let irreps = td_irreps();
        let seed = p("(x+y+z)^2");
        let basis = function_basis(&g, &irreps[3], &seed).unwrap();
        assert_eq!(basis, vec![p("2*y*z"), p("2*x*z"), p("2*x*y")]);
        let a = function_basis(&g, &irreps[0], &seed).unwrap();
        assert_eq!(a, vec![p("x^2 + y^2 + z^2")]);
        assert_eq!(
            function_basis(&g, &irreps[1], &seed),
            Err(Error::SeedHasNoComponent("B".into()))
        );
    }

    #[test]
    fn projector_range() {
        let g = td_group();
        let irreps = td_irreps();
        assert_eq!(project(&g, &irreps[0], 1, 0, &p("x")), Err(Error::IndexOutOfRange(1)));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial<QuadNumber>> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -3i64..4), 1..5).prop_map(|terms| {
            let mut acc = Polynomial::zero();
            for ((a, b, c), k) in terms {
                acc = &acc + &Polynomial::monomial([a, b, c], QuadNumber::from(k));
            }
            acc
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn left_action(poly in small_poly(), i in 0usize..24, j in 0usize..24) {
            let g = td_group();
            let ri = g.element(i).as_matrix().unwrap();
            let rj = g.element(j).as_matrix().unwrap();
            let rij = g.element(g.mul(i, j)).as_matrix().unwrap();
            let lhs = act(ri, &act(rj, &poly).unwrap()).unwrap();
            prop_assert_eq!(lhs, act(rij, &poly).unwrap());
        }

        #[test]
        fn covariance(poly in small_poly(), s in 0usize..24, which in 0usize..5) {
            let g = td_group();
            let irreps = td_irreps();
            let d = &irreps[which];
            let rs = g.element(s).as_matrix().unwrap();
            for v in 0..d.dim() {
                let fs: Vec<_> = (0..d.dim()).map(|u| project(&g, d, u, v, &poly).unwrap()).collect();
                for u in 0..d.dim() {
                    let lhs = act(rs, &fs[u]).unwrap();
                    let mut rhs = Polynomial::zero();
                    for (w, f) in fs.iter().enumerate() {
                        rhs = &rhs + &f.scale(&d.matrix(s)[(w, u)]);
                    }
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }

        #[test]
        fn idempotent(poly in small_poly(), which in 0usize..5) {
            let g = td_group();
            let irreps = td_irreps();
            let d = &irreps[which];
            for u in 0..d.dim() {
                let once = project(&g, d, u, u, &poly).unwrap();
                prop_assert_eq!(project(&g, d, u, u, &once).unwrap(), once);
            }
        }
    }
}
