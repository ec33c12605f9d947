//! Conjugacy classes, subgroups, cosets, quotients and generating pairs,
//! all computed from the Cayley table.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::scalar::Scalar;

/// Default upper bound on the group order for the subgroup lattice search.
pub const DEFAULT_LATTICE_BOUND: usize = 100;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjugacyClass {
    /// Sorted element indices.
    pub members: Vec<usize>,
    /// Smallest member.
    pub representative: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub is_normal: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    pub subgroup: Subgroup,
    pub side: Side,
    /// First coset is the subgroup itself; each coset is sorted.
    pub cosets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct QuotientGroup<S> {
    pub normal: Subgroup,
    /// Cosets in quotient element order; coset `k` has representative
    /// `cosets[k][0]`.
    pub cosets: Vec<Vec<usize>>,
    pub quotient: Group<S>,
    /// Element index of the base group -> coset index.
    pub projection: Vec<usize>,
}

/// Orbits under conjugation, ordered by smallest member.
pub fn conjugacy_classes<S: Scalar>(g: &Group<S>) -> Vec<ConjugacyClass> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let orbit: BTreeSet<usize> = (0..n).map(|h| g.conjugate(x, h)).collect();
        for &y in &orbit {
            assigned[y] = true;
        }
        classes.push(ConjugacyClass {
            members: orbit.into_iter().collect(),
            representative: x,
        });
    }
    classes
}

/// Index of the class containing each element.
pub fn class_index(classes: &[ConjugacyClass], n: usize) -> Vec<usize> {
    let mut idx = vec![0; n];
    for (k, c) in classes.iter().enumerate() {
        for &m in &c.members {
            idx[m] = k;
        }
    }
    idx
}

/// The class of inverses of the members of `c`.
pub fn reciprocal_class<S: Scalar>(g: &Group<S>, c: &ConjugacyClass) -> ConjugacyClass {
    let members: BTreeSet<usize> = c.members.iter().map(|&x| g.inverse(x)).collect();
    let members: Vec<usize> = members.into_iter().collect();
    ConjugacyClass {
        representative: members[0],
        members,
    }
}

/// Subgroup generated by a set of element indices.
pub fn closure_of<S: Scalar>(g: &Group<S>, gens: &[usize]) -> Vec<usize> {
    let mut members = vec![false; g.order()];
    members[0] = true;
    let mut list = vec![0];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !members[y] {
                members[y] = true;
                list.push(y);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    list
}

/// Identity, closure and inverses, checked directly.
pub fn is_subgroup<S: Scalar>(g: &Group<S>, set: &[usize]) -> bool {
    let n = g.order();
    if set.iter().any(|&x| x >= n) {
        return false;
    }
    let mut member = vec![false; n];
    for &x in set {
        member[x] = true;
    }
    member[0]
        && set.iter().all(|&x| member[g.inverse(x)])
        && set.iter().all(|&x| set.iter().all(|&y| member[g.mul(x, y)]))
}

pub fn is_normal<S: Scalar>(g: &Group<S>, set: &[usize]) -> bool {
    let mut member = vec![false; g.order()];
    for &x in set {
        member[x] = true;
    }
    (0..g.order()).all(|h| set.iter().all(|&x| member[g.conjugate(x, h)]))
}

fn make_subgroup<S: Scalar>(g: &Group<S>, mut members: Vec<usize>) -> Subgroup {
    members.sort_unstable();
    members.dedup();
    let is_normal = is_normal(g, &members);
    Subgroup { members, is_normal }
}

/// Every subgroup, sorted by `(order, members)`, found by cyclic
/// extension: start from the cyclic subgroups and keep adjoining one
/// outside element and closing until nothing new appears.
pub fn subgroup_lattice<S: Scalar>(g: &Group<S>, bound: usize) -> Result<Vec<Subgroup>> {
    let n = g.order();
    if n > bound {
        return Err(Error::BoundExceeded { order: n, bound });
    }
    let mut known: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let c = g.cyclic_subgroup(x);
        if known.insert(c.clone()) {
            queue.push(c);
        }
    }
    while let Some(h) = queue.pop() {
        let mut member = vec![false; n];
        for &x in &h {
            member[x] = true;
        }
        for (x, _) in member.iter().enumerate().filter(|(_, &m)| !m) {
            let mut gens = h.clone();
            gens.push(x);
            let k = closure_of(g, &gens);
            if known.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    let mut subs: Vec<Subgroup> = known.into_iter().map(|m| make_subgroup(g, m)).collect();
    subs.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    Ok(subs)
}

/// Normal subgroups, sorted like [`subgroup_lattice`]. Built as unions of
/// conjugacy classes containing the identity that are closed under
/// multiplication, so no lattice search is needed.
pub fn normal_subgroups<S: Scalar>(g: &Group<S>) -> Vec<Subgroup> {
    let classes = conjugacy_classes(g);
    let rest = &classes[1..];
    let mut found: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    // normal closure of each class, then joins; classes are few
    let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
    for c in rest {
        let k = closure_of(g, &c.members);
        frontier.push(k);
    }
    let mut seen: HashSet<Vec<usize>> = frontier.iter().cloned().collect();
    let mut i = 0;
    while i < frontier.len() {
        let a = frontier[i].clone();
        for j in 0..=i {
            let mut gens = a.clone();
            gens.extend(&frontier[j]);
            let k = closure_of(g, &gens);
            if seen.insert(k.clone()) {
                frontier.push(k);
            }
        }
        i += 1;
    }
    for m in seen {
        debug_assert!(is_normal(g, &m));
        found.insert((m.len(), m));
    }
    found
        .into_iter()
        .map(|(_, members)| Subgroup {
            members,
            is_normal: true,
        })
        .collect()
}

pub fn subgroup_from_members<S: Scalar>(g: &Group<S>, members: &[usize]) -> Result<Subgroup> {
    let mut m = members.to_vec();
    m.sort_unstable();
    m.dedup();
    if !is_subgroup(g, &m) {
        return Err(Error::NotASubgroup);
    }
    Ok(make_subgroup(g, m))
}

/// Left (`xH`) or right (`Hx`) cosets; the first is `H`, the rest follow in
/// order of their smallest element.
pub fn cosets<S: Scalar>(g: &Group<S>, h: &Subgroup, side: Side) -> Result<CosetDecomposition> {
    if !is_subgroup(g, &h.members) {
        return Err(Error::NotASubgroup);
    }
    let n = g.order();
    let mut covered = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if covered[x] {
            continue;
        }
        let mut coset: Vec<usize> = h
            .members
            .iter()
            .map(|&m| match side {
                Side::Left => g.mul(x, m),
                Side::Right => g.mul(m, x),
            })
            .collect();
        coset.sort_unstable();
        for &y in &coset {
            covered[y] = true;
        }
        out.push(coset);
    }
    Ok(CosetDecomposition {
        subgroup: h.clone(),
        side,
        cosets: out,
    })
}

/// `G / H` with multiplication through coset representatives. Every pair of
/// members is checked, so a non-normal `H` is rejected rather than giving an
/// ill-defined product.
pub fn quotient_group<S: Scalar>(g: &Group<S>, h: &Subgroup) -> Result<QuotientGroup<S>> {
    if !is_subgroup(g, &h.members) {
        return Err(Error::NotASubgroup);
    }
    if !is_normal(g, &h.members) {
        return Err(Error::NotNormal);
    }
    let decomposition = cosets(g, h, Side::Left)?;
    let cs = decomposition.cosets;
    let mut projection = vec![0; g.order()];
    for (k, c) in cs.iter().enumerate() {
        for &x in c {
            projection[x] = k;
        }
    }
    let m = cs.len();
    let mut table = vec![vec![0; m]; m];
    for a in 0..m {
        for b in 0..m {
            let p = projection[g.mul(cs[a][0], cs[b][0])];
            for &x in &cs[a] {
                for &y in &cs[b] {
                    if projection[g.mul(x, y)] != p {
                        return Err(Error::NotNormal);
                    }
                }
            }
            table[a][b] = p;
        }
    }
    let labels = cs
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.iter().map(|&x| g.label(x)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let quotient = Group::from_table(table, labels)?;
    Ok(QuotientGroup {
        normal: h.clone(),
        cosets: cs,
        quotient,
        projection,
    })
}

/// Unordered pairs `{x, y}` (x < y) generating the whole group, by closing
/// every pair.
pub fn generating_pairs<S: Scalar>(g: &Group<S>) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if closure_of(g, &[x, y]).len() == n {
                out.push((x, y));
            }
        }
    }
    out
}

/// Maximal proper subgroups of a lattice.
pub fn maximal_subgroups(lattice: &[Subgroup], order: usize) -> Vec<Subgroup> {
    let proper: Vec<&Subgroup> = lattice.iter().filter(|s| s.order() < order).collect();
    proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.order() > s.order() && s.members.iter().all(|&x| t.contains(x)))
        })
        .map(|s| (*s).clone())
        .collect()
}

/// Same pairs as [`generating_pairs`], by the complement rule: a pair
/// generates iff no maximal proper subgroup contains both elements.
pub fn generating_pairs_by_maximal<S: Scalar>(g: &Group<S>, lattice: &[Subgroup]) -> Vec<(usize, usize)> {
    let n = g.order();
    let maximal = maximal_subgroups(lattice, n);
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if !maximal.iter().any(|m| m.contains(x) && m.contains(y)) {
                out.push((x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::td_group;
    use crate::group::{GroupElement, DEFAULT_MAX_ORDER};
    use crate::QuadNumber;

    fn ids(g: &Group<QuadNumber>, labels: &[&str]) -> Vec<usize> {
        let mut v: Vec<usize> = labels.iter().map(|l| g.index_of(l).unwrap()).collect();
        v.sort();
        v
    }

    fn v4() -> Group<QuadNumber> {
        let td = td_group();
        let gens: Vec<GroupElement> = ["Tx2", "Ty2"]
            .iter()
            .map(|l| td.element(td.index_of(l).unwrap()).clone())
            .collect();
        Group::close_generators(&gens, DEFAULT_MAX_ORDER).unwrap()
    }

    fn trivial() -> Group<QuadNumber> {
        Group::close_generators(&[GroupElement::Matrix(crate::linalg::Matrix::identity(1))], 4).unwrap()
    }

    #[test]
    fn td_classes() {
        let g = td_group();
        let classes = conjugacy_classes(&g);
        let sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 3, 8, 6, 6]);
        assert_eq!(classes[1].members, ids(&g, &["Tx2", "Ty2", "Tz2"]));
        assert_eq!(classes[3].members, ids(&g, &["a", "b", "c", "d", "e", "f"]));
        for c in &classes {
            assert_eq!(&reciprocal_class(&g, c), c);
            assert_eq!(g.order() % c.size(), 0);
        }
    }

    #[test]
    fn abelian_and_trivial_classes() {
        assert_eq!(conjugacy_classes(&trivial()).len(), 1);
        let v = v4();
        let classes = conjugacy_classes(&v);
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.size() == 1));
        assert_eq!(reciprocal_class(&v, &classes[0]), classes[0]);
    }

    #[test]
    fn small_lattices() {
        assert_eq!(subgroup_lattice(&trivial(), DEFAULT_LATTICE_BOUND).unwrap().len(), 1);
        // brute force over all 16 subsets of V4
        let v = v4();
        let brute = (0u32..16)
            .filter(|mask| {
                let set: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
                is_subgroup(&v, &set)
            })
            .count();
        assert_eq!(brute, 5);
        let lattice = subgroup_lattice(&v, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(lattice.len(), brute);
        assert!(lattice.iter().all(|s| s.is_normal));
        assert_eq!(normal_subgroups(&v).len(), 5);
        let td = td_group();
        assert_eq!(
            subgroup_lattice(&td, 10),
            Err(Error::BoundExceeded { order: 24, bound: 10 })
        );
    }

    #[test]
    fn non_normal_order_six() {
        let g = td_group();
        let h = subgroup_from_members(&g, &ids(&g, &["d", "e", "f", "R1", "R1sq", "E"])).unwrap();
        assert!(!h.is_normal);
        // explicit witness: conjugating by Tx2 leaves the set
        let tx = g.index_of("Tx2").unwrap();
        assert!(h.members.iter().any(|&x| !h.contains(g.conjugate(x, tx))));
        assert_eq!(quotient_group(&g, &h).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn cosets_of_whole_group_and_errors() {
        let g = td_group();
        let whole = subgroup_from_members(&g, &(0..24).collect::<Vec<_>>()).unwrap();
        assert_eq!(cosets(&g, &whole, Side::Left).unwrap().cosets.len(), 1);
        let bad = Subgroup {
            members: ids(&g, &["E", "a", "b"]),
            is_normal: false,
        };
        assert_eq!(cosets(&g, &bad, Side::Right).unwrap_err(), Error::NotASubgroup);
        let q = quotient_group(&g, &whole).unwrap();
        assert_eq!(q.quotient.order(), 1);
    }

    #[test]
    fn generating_pair_methods_agree() {
        let g = td_group();
        let lattice = subgroup_lattice(&g, DEFAULT_LATTICE_BOUND).unwrap();
        let a = generating_pairs(&g);
        let b = generating_pairs_by_maximal(&g, &lattice);
        assert_eq!(a, b);
        assert_eq!(a.len(), 108);
        let pair = |x: &str, y: &str| {
            let (i, j) = (g.index_of(x).unwrap(), g.index_of(y).unwrap());
            (i.min(j), i.max(j))
        };
        assert!(a.contains(&pair("R1", "a")));
        assert!(!a.contains(&pair("Tx2", "Ty2")));
    }
}
