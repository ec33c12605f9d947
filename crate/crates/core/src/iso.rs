//! Isomorphism testing against a catalog of small groups by backtracking
//! over generator images. Exponential in general, instant at order <= 24.

use std::sync::OnceLock;

use crate::group::{Group, GroupElement, Permutation, DEFAULT_MAX_ORDER};
use crate::scalar::Scalar;
use crate::structure::closure_of;
use crate::QuadNumber;

/// `(name, degree, generators in cycle notation)`.
const CATALOG_SPEC: &[(&str, usize, &[&str])] = &[
    ("C1", 1, &["()"]),
    ("C2", 2, &["(0 1)"]),
    ("C3", 3, &["(0 1 2)"]),
    ("C4", 4, &["(0 1 2 3)"]),
    ("C2xC2", 4, &["(0 1)", "(2 3)"]),
    ("C5", 5, &["(0 1 2 3 4)"]),
    ("C6", 5, &["(0 1)(2 3 4)"]),
    ("D3", 3, &["(0 1 2)", "(0 1)"]),
    ("C7", 7, &["(0 1 2 3 4 5 6)"]),
    ("C8", 8, &["(0 1 2 3 4 5 6 7)"]),
    ("C4xC2", 6, &["(0 1 2 3)", "(4 5)"]),
    ("C2xC2xC2", 6, &["(0 1)", "(2 3)", "(4 5)"]),
    ("D4", 4, &["(0 1 2 3)", "(0 2)"]),
    ("Q8", 8, &["(0 1 3 6)(2 5 7 4)", "(0 2 3 7)(1 4 6 5)"]),
    ("C9", 9, &["(0 1 2 3 4 5 6 7 8)"]),
    ("C3xC3", 6, &["(0 1 2)", "(3 4 5)"]),
    ("C10", 7, &["(0 1)(2 3 4 5 6)"]),
    ("D5", 5, &["(0 1 2 3 4)", "(1 4)(2 3)"]),
    ("C11", 11, &["(0 1 2 3 4 5 6 7 8 9 10)"]),
    ("C12", 7, &["(0 1 2 3)(4 5 6)"]),
    ("C6xC2", 7, &["(0 1)(2 3 4)", "(5 6)"]),
    ("D6", 6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"]),
    ("A4", 4, &["(0 1 2)", "(0 1)(2 3)"]),
    ("Dic3", 7, &["(0 1 2)", "(1 2)(3 4 5 6)"]),
    ("S4", 4, &["(0 1 2 3)", "(0 1)"]),
    ("C2xA4", 6, &["(0 1 2)", "(0 1)(2 3)", "(4 5)"]),
];

pub struct CatalogEntry {
    pub name: &'static str,
    pub group: Group<QuadNumber>,
}

/// Catalog groups, built once from their permutation generators.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        CATALOG_SPEC
            .iter()
            .map(|(name, degree, gens)| {
                let gens: Vec<GroupElement> = gens
                    .iter()
                    .map(|c| GroupElement::Permutation(Permutation::from_cycles(c, *degree).unwrap()))
                    .collect();
                let group = Group::close_generators(&gens, DEFAULT_MAX_ORDER).unwrap();
                CatalogEntry { name, group }
            })
            .collect()
    })
}

fn order_profile<S: Scalar>(g: &Group<S>) -> Vec<usize> {
    let mut v: Vec<usize> = (0..g.order()).map(|i| g.element_order(i)).collect();
    v.sort_unstable();
    v
}

/// A short generating set: the first generating pair in index order if one
/// exists, otherwise greedy accumulation.
pub fn small_generating_set<S: Scalar>(g: &Group<S>) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return vec![];
    }
    for x in 1..n {
        if closure_of(g, &[x]).len() == n {
            return vec![x];
        }
    }
    for x in 1..n {
        for y in x + 1..n {
            if closure_of(g, &[x, y]).len() == n {
                return vec![x, y];
            }
        }
    }
    let mut gens = Vec::new();
    let mut current = vec![0];
    for x in 1..n {
        if current.binary_search(&x).is_err() {
            gens.push(x);
            current = closure_of(g, &gens);
            if current.len() == n {
                break;
            }
        }
    }
    gens
}

/// An isomorphism `g -> h` as an index map, if one exists.
pub fn find_isomorphism<S: Scalar, T: Scalar>(g: &Group<S>, h: &Group<T>) -> Option<Vec<usize>> {
    if g.order() != h.order() || order_profile(g) != order_profile(h) {
        return None;
    }
    let gens = small_generating_set(g);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let ord = g.element_order(x);
            (0..h.order()).filter(|&y| h.element_order(y) == ord).collect()
        })
        .collect();
    let mut images = vec![0; gens.len()];
    search(g, h, &gens, &candidates, &mut images, 0)
}

fn search<S: Scalar, T: Scalar>(
    g: &Group<S>,
    h: &Group<T>,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        return extend(g, h, gens, images);
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        if let Some(map) = search(g, h, gens, candidates, images, depth + 1) {
            return Some(map);
        }
    }
    None
}

/// Extends generator images along the right Cayley graph; succeeds iff the
/// assignment defines an injective homomorphism.
fn extend<S: Scalar, T: Scalar>(g: &Group<S>, h: &Group<T>, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let img = h.mul(map[x], images[k]);
            if map[y] == usize::MAX {
                if used[img] {
                    return None;
                }
                map[y] = img;
                used[img] = true;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
        i += 1;
    }
    (queue.len() == n).then_some(map)
}

/// Name of the first catalog group isomorphic to `g`, with the map.
pub fn isomorphism_type<S: Scalar>(g: &Group<S>) -> Option<(&'static str, Vec<usize>)> {
    catalog()
        .iter()
        .find_map(|entry| find_isomorphism(g, &entry.group).map(|m| (entry.name, m)))
}

/// `map` is a bijective homomorphism `g -> h`.
pub fn is_isomorphism<S: Scalar, T: Scalar>(g: &Group<S>, h: &Group<T>, map: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    if map.iter().any(|&y| y >= n || std::mem::replace(&mut seen[y], true)) {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| map[g.mul(x, y)] == h.mul(map[x], map[y])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::td_group;
    use crate::structure::{quotient_group, subgroup_from_members};

    #[test]
    fn catalog_orders_and_distinctness() {
        let expected = [
            1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9, 9, 10, 10, 11, 12, 12, 12, 12, 12, 24, 24,
        ];
        let cat = catalog();
        let orders: Vec<usize> = cat.iter().map(|e| e.group.order()).collect();
        assert_eq!(orders, expected);
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                assert!(
                    find_isomorphism(&a.group, &b.group).is_none(),
                    "{} ~ {}",
                    a.name,
                    b.name
                );
            }
        }
    }

    #[test]
    fn q8_and_dic3_have_one_involution() {
        for name in ["Q8", "Dic3"] {
            let g = &catalog().iter().find(|e| e.name == name).unwrap().group;
            let involutions = (0..g.order()).filter(|&i| g.element_order(i) == 2).count();
            assert_eq!(involutions, 1, "{name}");
            assert!(!g.is_abelian());
        }
    }

    #[test]
    fn td_is_s4() {
        let g = td_group();
        let (name, map) = isomorphism_type(&g).unwrap();
        assert_eq!(name, "S4");
        let s4 = &catalog().iter().find(|e| e.name == "S4").unwrap().group;
        assert!(is_isomorphism(&g, s4, &map));
    }

    #[test]
    fn small_groups() {
        let g = td_group();
        let tx = g.element(g.index_of("Tx2").unwrap()).clone();
        let c2 = Group::close_generators(&[tx], DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(isomorphism_type(&c2).unwrap().0, "C2");
        let whole = subgroup_from_members(&g, &(0..24).collect::<Vec<_>>()).unwrap();
        let trivial = quotient_group(&g, &whole).unwrap();
        assert_eq!(isomorphism_type(&trivial.quotient).unwrap().0, "C1");
    }
}
