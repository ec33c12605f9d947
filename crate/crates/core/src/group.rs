//! Finite groups given by generators: closure, Cayley table, inverses and
//! element orders.

use std::collections::BTreeSet;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::QuadNumber;

/// Default cap on closure size; generous for hand-sized groups and small
/// enough to stop on input that is not a finite group.
pub const DEFAULT_MAX_ORDER: usize = 1024;

const ASSOCIATIVITY_SAMPLES: usize = 200_000;

/// A bijection of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// Parses cycle notation such as `(0 1 2)(3)`; points not mentioned are
    /// fixed. `()` is the identity.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let bad = || Error::NotAPermutation(text.to_string());
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            for (k, &p) in points.iter().enumerate() {
                if p >= degree || seen[p] {
                    return Err(bad());
                }
                seen[p] = true;
                images[p] = points[(k + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self * other`: apply `other` first, then `self`, matching the
    /// left action of matrices on column vectors.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Permutation matrix with `M[p(i)][i] = 1`, so that
    /// `M(p) M(q) = M(p * q)`.
    pub fn to_matrix<S: Scalar>(&self) -> Matrix<S> {
        let n = self.degree();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(self.0[i], i)] = S::one();
        }
        m
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut done = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut cycle = vec![start];
            done[start] = true;
            let mut next = self.0[start];
            while next != start {
                cycle.push(next);
                done[next] = true;
                next = self.0[next];
            }
            let parts: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum GroupElement<S = QuadNumber> {
    Matrix(Matrix<S>),
    Permutation(Permutation),
}

impl<S: Scalar> GroupElement<S> {
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) if a.ncols() == b.nrows() => {
                Ok(GroupElement::Matrix(a.mul(b)))
            }
            (GroupElement::Permutation(a), GroupElement::Permutation(b)) if a.degree() == b.degree() => {
                Ok(GroupElement::Permutation(a.compose(b)))
            }
            _ => Err(Error::MixedKind),
        }
    }

    /// Matrix size or permutation degree.
    pub fn size(&self) -> usize {
        match self {
            GroupElement::Matrix(m) => m.nrows(),
            GroupElement::Permutation(p) => p.degree(),
        }
    }

    fn same_kind(&self, other: &Self) -> bool {
        matches!(
            (self, other),
            (GroupElement::Matrix(_), GroupElement::Matrix(_))
                | (GroupElement::Permutation(_), GroupElement::Permutation(_))
        ) && self.size() == other.size()
    }

    fn identity_like(&self) -> Self {
        match self {
            GroupElement::Matrix(m) => GroupElement::Matrix(Matrix::identity(m.nrows())),
            GroupElement::Permutation(p) => GroupElement::Permutation(Permutation::identity(p.degree())),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Matrix(m) => m.is_identity(),
            GroupElement::Permutation(p) => p.is_identity(),
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix<S>> {
        match self {
            GroupElement::Matrix(m) => Some(m),
            GroupElement::Permutation(_) => None,
        }
    }

    /// Matrix form, converting permutations to permutation matrices.
    pub fn to_matrix(&self) -> Matrix<S> {
        match self {
            GroupElement::Matrix(m) => m.clone(),
            GroupElement::Permutation(p) => p.to_matrix(),
        }
    }
}

impl<S: Scalar> fmt::Display for GroupElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Matrix(m) => write!(f, "{m}"),
            GroupElement::Permutation(p) => write!(f, "{p}"),
        }
    }
}

/// A finite group with its full Cayley table. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct Group<S = QuadNumber> {
    elements: Vec<GroupElement<S>>,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

fn position<S: Scalar>(elements: &[GroupElement<S>], x: &GroupElement<S>) -> Option<usize> {
    elements.iter().position(|e| e == x)
}

impl<S: Scalar> Group<S> {
    /// Smallest group containing `gens`, in breadth-first discovery order
    /// with the identity first.
    pub fn close_generators(gens: &[GroupElement<S>], max_order: usize) -> Result<Self> {
        let first = gens.first().ok_or(Error::MixedKind)?;
        if gens.iter().any(|g| !g.same_kind(first)) {
            return Err(Error::MixedKind);
        }
        for g in gens {
            if let GroupElement::Matrix(m) = g {
                if !m.is_square() {
                    return Err(Error::DimensionMismatch {
                        expected: m.nrows(),
                        found: m.ncols(),
                    });
                }
                if m.determinant().is_zero() {
                    return Err(Error::Singular);
                }
            }
        }
        let mut elements = vec![first.identity_like()];
        for g in gens {
            if position(&elements, g).is_none() {
                elements.push(g.clone());
            }
        }
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let p = elements[i].multiply(g)?;
                if position(&elements, &p).is_none() {
                    elements.push(p);
                    if elements.len() > max_order {
                        return Err(Error::OrderExceeded(max_order));
                    }
                }
            }
            i += 1;
        }
        Self::from_elements(elements)
    }

    /// Builds the table for an element list already known to be closed.
    fn from_elements(elements: Vec<GroupElement<S>>) -> Result<Self> {
        let n = elements.len();
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = elements[i].multiply(&elements[j])?;
                table[i][j] = position(&elements, &p)
                    .ok_or_else(|| Error::NotAGroup("product outside the element set".into()))?;
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Self::assemble(elements, labels, table)
    }

    fn assemble(elements: Vec<GroupElement<S>>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || (0..n).any(|j| table[0][j] != j || table[j][0] != j) {
            return Err(Error::NotAGroup("first element is not the identity".into()));
        }
        let inverses = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| table[i][j] == 0)
                    .ok_or_else(|| Error::NotAGroup(format!("element {i} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        let g = Group {
            elements,
            labels,
            table,
            inverses,
        };
        if !g.is_latin_square() {
            return Err(Error::NotAGroup("table is not a Latin square".into()));
        }
        Ok(g)
    }

    /// Group from a raw Cayley table (`table[i][j]` = index of `i*j`). The
    /// identity is moved to position 0; elements become their left-regular
    /// permutations.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) || labels.len() != n {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        let id = (0..n)
            .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut order: Vec<usize> = vec![id];
        order.extend((0..n).filter(|&i| i != id));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let new_table: Vec<Vec<usize>> = order
            .iter()
            .map(|&a| order.iter().map(|&b| pos[table[a][b]]).collect())
            .collect();
        let elements = new_table
            .iter()
            .map(|row| GroupElement::Permutation(Permutation(row.clone())))
            .collect();
        let new_labels = order.iter().map(|&i| labels[i].clone()).collect();
        let g = Self::assemble(elements, new_labels, new_table)?;
        if !g.is_associative() {
            return Err(Error::NotAGroup("product is not associative".into()));
        }
        Ok(g)
    }

    /// Reorders elements; `order[k]` is the old index placed at position
    /// `k`. The identity must stay first.
    pub fn reordered(&self, order: &[usize], labels: Vec<String>) -> Result<Self> {
        let n = self.order();
        let mut pos = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || pos[old] != usize::MAX {
                return Err(Error::IndexOutOfRange(old));
            }
            pos[old] = new;
        }
        if order.len() != n || labels.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: order.len(),
            });
        }
        let elements = order.iter().map(|&i| self.elements[i].clone()).collect();
        let table = order
            .iter()
            .map(|&a| order.iter().map(|&b| pos[self.table[a][b]]).collect())
            .collect();
        Self::assemble(elements, labels, table)
    }

    pub fn set_label(&mut self, i: usize, label: impl Into<String>) {
        self.labels[i] = label.into();
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[GroupElement<S>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement<S> {
        &self.elements[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        let wanted = normalize_label(label);
        self.labels
            .iter()
            .position(|l| normalize_label(l) == wanted)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn index_of_element(&self, x: &GroupElement<S>) -> Option<usize> {
        position(&self.elements, x)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Index of `elements[i] * elements[j]`.
    pub fn multiply(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.order();
        if i >= n {
            return Err(Error::IndexOutOfRange(i));
        }
        if j >= n {
            return Err(Error::IndexOutOfRange(j));
        }
        Ok(self.table[i][j])
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut n = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            n += 1;
        }
        n
    }

    /// `{x^n : n >= 0}` as a sorted index set.
    pub fn cyclic_subgroup(&self, i: usize) -> Vec<usize> {
        let mut set = BTreeSet::from([0]);
        let mut x = i;
        while x != 0 {
            set.insert(x);
            x = self.mul(x, i);
        }
        set.into_iter().collect()
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|i| self.element_order(i))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..i).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Every row and every column of the table is a permutation.
    pub fn is_latin_square(&self) -> bool {
        let n = self.order();
        let row_ok = self.table.iter().all(|row| {
            let mut seen = vec![false; n];
            row.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        });
        let col_ok = (0..n).all(|c| {
            let mut seen = vec![false; n];
            (0..n).all(|r| {
                let v = self.table[r][c];
                v < n && !std::mem::replace(&mut seen[v], true)
            })
        });
        row_ok && col_ok
    }

    /// Associativity on all triples up to order 60, on a fixed-seed random
    /// sample of triples above that.
    pub fn is_associative(&self) -> bool {
        let n = self.order();
        let holds = |i: usize, j: usize, k: usize| self.table[self.table[i][j]][k] == self.table[i][self.table[j][k]];
        if n <= 60 {
            return (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| holds(i, j, k))));
        }
        let mut rng = StdRng::seed_from_u64(0x5eed);
        (0..ASSOCIATIVITY_SAMPLES).all(|_| holds(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
    }

    /// Table products agree with multiplying the stored elements.
    pub fn table_matches_elements(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.elements[i]
                    .multiply(&self.elements[j])
                    .is_ok_and(|p| p == self.elements[self.table[i][j]])
            })
        })
    }
}

/// Case-sensitive label normalisation: drops `^`, `_`, braces and spaces
/// so that `T_x^2`, `Tx^2` and `Tx2` coincide, and maps `R1^2` to `R1sq`.
pub fn normalize_label(label: &str) -> String {
    let s: String = label
        .chars()
        .filter(|c| !matches!(c, '^' | '_' | '{' | '}' | ' ' | '$'))
        .collect();
    if s.starts_with('R') && s.len() == 3 && s.ends_with('2') {
        return format!("{}sq", &s[..2]);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn permutation_cycles_round_trip() {
        let p = Permutation::from_cycles("(0 1 2)(3)", 4).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 3]);
        assert_eq!(p.to_string(), "(0 1 2)(3)");
        assert_eq!(Permutation::from_cycles("()", 2).unwrap(), Permutation::identity(2));
        assert!(Permutation::from_cycles("(0 0)", 2).is_err());
        assert!(Permutation::from_cycles("(0 5)", 2).is_err());
        let q = Permutation::from_cycles("(0 1)", 4).unwrap();
        let pq = p.compose(&q);
        let mp: Matrix<QuadNumber> = p.to_matrix();
        assert_eq!(mp.mul(&q.to_matrix()), pq.to_matrix());
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn trivial_closure() {
        let e = GroupElement::<QuadNumber>::Matrix(Matrix::identity(3));
        let g = Group::close_generators(&[e], DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.table(), &[vec![0]]);
    }

    #[test]
    fn klein_four_from_half_turns() {
        let td = fixture::td_group();
        let gens: Vec<_> = ["Tx2", "Ty2"]
            .iter()
            .map(|l| td.element(td.index_of(l).unwrap()).clone())
            .collect();
        let v4 = Group::close_generators(&gens, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(v4.order(), 4);
        let tz = td.element(td.index_of("Tz2").unwrap());
        assert!(v4.index_of_element(tz).is_some());
        assert!(v4.is_abelian());
    }

    #[test]
    fn runaway_and_mixed_input() {
        // a shear has infinite order
        let shear = GroupElement::<QuadNumber>::Matrix(Matrix::from_ints(&[&[1, 1], &[0, 1]]));
        assert_eq!(
            Group::close_generators(std::slice::from_ref(&shear), 50).unwrap_err(),
            Error::OrderExceeded(50)
        );
        let perm = GroupElement::<QuadNumber>::Permutation(Permutation::identity(2));
        assert_eq!(
            Group::close_generators(&[shear, perm], 50).unwrap_err(),
            Error::MixedKind
        );
        let singular = GroupElement::<QuadNumber>::Matrix(Matrix::from_ints(&[&[1, 1], &[1, 1]]));
        assert_eq!(Group::close_generators(&[singular], 50).unwrap_err(), Error::Singular);
    }

    #[test]
    fn orders_and_cyclic_subgroups() {
        let td = fixture::td_group();
        let ix = |l: &str| td.index_of(l).unwrap();
        assert_eq!(td.element_order(ix("r")), 4);
        assert_eq!(td.element_order(0), 1);
        assert_eq!(td.element_order(ix("R3")), 3);
        let mut expected = vec![ix("t"), ix("Ty2"), ix("u"), 0];
        expected.sort();
        assert_eq!(td.cyclic_subgroup(ix("t")), expected);
        assert_eq!(td.cyclic_subgroup(0), vec![0]);
        let mut r1 = vec![ix("R1"), ix("R1sq"), 0];
        r1.sort();
        assert_eq!(td.cyclic_subgroup(ix("R1")), r1);
        assert_eq!(td.exponent(), 12);
    }

    #[test]
    fn multiply_bounds() {
        let td = fixture::td_group();
        assert_eq!(td.multiply(24, 0), Err(Error::IndexOutOfRange(24)));
        for x in 0..24 {
            assert_eq!(td.multiply(0, x).unwrap(), x);
        }
    }

    #[test]
    fn from_table_moves_identity_first() {
        // Z3 written with the identity in the middle
        let table = vec![vec![2, 0, 1], vec![0, 1, 2], vec![1, 2, 0]];
        let labels = vec!["a".into(), "e".into(), "b".into()];
        let g = Group::<QuadNumber>::from_table(table, labels).unwrap();
        assert_eq!(g.label(0), "e");
        assert_eq!(g.order(), 3);
        assert!(g.table_matches_elements());
        assert!(Group::<QuadNumber>::from_table(vec![vec![0, 1], vec![1, 1]], vec!["e".into(), "x".into()]).is_err());
    }

    #[test]
    fn labels_normalise() {
        assert_eq!(normalize_label("T_x^2"), "Tx2");
        assert_eq!(normalize_label("R_1^2"), "R1sq");
        assert_eq!(normalize_label("R1sq"), "R1sq");
    }
}
