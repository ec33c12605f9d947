//! Built-in full tetrahedral group T_d: the 24 rotation/reflection matrices
//! in their conventional order, the five irreducible representations in
//! explicit form, and reference Clebsch-Gordan transforms.

use crate::error::Result;
use crate::group::{Group, GroupElement, Permutation, DEFAULT_MAX_ORDER};
use crate::linalg::Matrix;
use crate::repr::Representation;
use crate::scalar::Scalar;
use crate::QuadNumber;

type M3 = [[i64; 3]; 3];

/// Element labels in table order.
pub const TD_LABELS: [&str; 24] = [
    "E", "Tx2", "Ty2", "Tz2", "R1", "R2", "R3", "R4", "R1sq", "R2sq", "R3sq", "R4sq", "a", "b", "c", "d", "e", "f",
    "r", "s", "t", "u", "v", "w",
];

const TD_MATRICES: [M3; 24] = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
    [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
    [[-1, 0, 0], [0, -1, 0], [0, 0, 1]],
    // 120 degree turns about OA1, OB2, OA3, OB4
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    [[0, -1, 0], [0, 0, 1], [-1, 0, 0]],
    [[0, 1, 0], [0, 0, -1], [-1, 0, 0]],
    [[0, -1, 0], [0, 0, -1], [1, 0, 0]],
    // 240 degree turns
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    [[0, 0, -1], [-1, 0, 0], [0, 1, 0]],
    [[0, 0, -1], [1, 0, 0], [0, -1, 0]],
    [[0, 0, 1], [-1, 0, 0], [0, -1, 0]],
    // mirror planes swapping a pair of vertices
    [[1, 0, 0], [0, 0, -1], [0, -1, 0]],
    [[0, -1, 0], [-1, 0, 0], [0, 0, 1]],
    [[0, 0, -1], [0, 1, 0], [-1, 0, 0]],
    [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    // rotoreflections
    [[-1, 0, 0], [0, 0, -1], [0, 1, 0]],
    [[-1, 0, 0], [0, 0, 1], [0, -1, 0]],
    [[0, 0, -1], [0, -1, 0], [1, 0, 0]],
    [[0, 0, 1], [0, -1, 0], [-1, 0, 0]],
    [[0, -1, 0], [1, 0, 0], [0, 0, -1]],
    [[0, 1, 0], [-1, 0, 0], [0, 0, -1]],
];

/// Vertices A1, B2, A3, B4 of the tetrahedron.
pub const TD_VERTICES: [[i64; 3]; 4] = [[1, 1, 1], [1, -1, -1], [-1, -1, 1], [-1, 1, -1]];

fn m3<S: Scalar>(m: &M3) -> Matrix<S> {
    Matrix::from_fn(3, 3, |r, c| S::from_int(m[r][c]))
}

/// The 24 matrices in table order.
pub fn td_matrices<S: Scalar>() -> Vec<Matrix<S>> {
    TD_MATRICES.iter().map(m3).collect()
}

pub fn td_matrix<S: Scalar>(label: &str) -> Matrix<S> {
    let i = TD_LABELS.iter().position(|&l| l == label).expect("unknown T_d label");
    m3(&TD_MATRICES[i])
}

/// T_d generated by R1 and a, reordered to the conventional element order
/// and labelled. Panics if the closure does not reproduce the fixture
/// matrices (which would be a bug, and is covered by tests).
pub fn td_group() -> Group<QuadNumber> {
    td_group_over::<QuadNumber>().expect("T_d fixture closure")
}

pub fn td_group_over<S: Scalar>() -> Result<Group<S>> {
    let gens = [
        GroupElement::Matrix(td_matrix::<S>("R1")),
        GroupElement::Matrix(td_matrix::<S>("a")),
    ];
    let closed = Group::close_generators(&gens, DEFAULT_MAX_ORDER)?;
    let order = td_matrices::<S>()
        .into_iter()
        .map(|m| {
            closed
                .index_of_element(&GroupElement::Matrix(m))
                .ok_or(crate::Error::NotASubgroup)
        })
        .collect::<Result<Vec<_>>>()?;
    closed.reordered(&order, TD_LABELS.iter().map(|s| s.to_string()).collect())
}

/// Permutation of the four vertices induced by a 3x3 integer-valued
/// element, or `None` if a vertex is not mapped onto a vertex.
pub fn vertex_permutation(m: &Matrix<QuadNumber>) -> Option<Permutation> {
    let verts: Vec<Vec<QuadNumber>> = TD_VERTICES
        .iter()
        .map(|v| v.iter().map(|&x| QuadNumber::from(x)).collect())
        .collect();
    let images = verts
        .iter()
        .map(|v| {
            let w = m.mul_vec(v);
            verts.iter().position(|u| *u == w)
        })
        .collect::<Option<Vec<_>>>()?;
    Permutation::from_images(images).ok()
}

fn class_of(label: &str) -> usize {
    match label {
        "E" | "Tx2" | "Ty2" | "Tz2" => 0,
        "R1" | "R2" | "R3" | "R4" => 1,
        "R1sq" | "R2sq" | "R3sq" | "R4sq" => 2,
        "a" | "f" | "r" | "s" => 3,
        "c" | "d" | "t" | "u" => 4,
        _ => 5,
    }
}

fn in_rotation_subgroup(i: usize) -> bool {
    i < 12
}

/// Names of the five irreps in table order.
pub const TD_IRREP_NAMES: [&str; 5] = ["A", "B", "D3", "Td", "Td'"];

/// The irreducible representations A, B, D3, Td, Td' in explicit
/// orthogonal form. D3 is pulled back from the quotient by
/// {E, Tx2, Ty2, Tz2}; Td is the defining representation and Td' is Td
/// with the sign flipped off the rotation subgroup.
pub fn td_irreps() -> Vec<Representation> {
    let group = td_group();
    let n = group.order();
    let half = QuadNumber::from_ratio(1, 2);
    let s = QuadNumber::radical(1, 2, 3);
    let q = |v: &QuadNumber, neg: bool| if neg { -v } else { v.clone() };
    let d3_images = [
        Matrix::identity(2),
        Matrix::from_rows(vec![vec![q(&half, true), q(&s, true)], vec![s.clone(), q(&half, true)]]),
        Matrix::from_rows(vec![vec![q(&half, true), s.clone()], vec![q(&s, true), q(&half, true)]]),
        Matrix::from_ints(&[&[1, 0], &[0, -1]]),
        Matrix::from_rows(vec![vec![q(&half, true), s.clone()], vec![s.clone(), half.clone()]]),
        Matrix::from_rows(vec![vec![q(&half, true), q(&s, true)], vec![q(&s, true), half.clone()]]),
    ];
    let one = Matrix::identity(1);
    let minus = Matrix::from_ints(&[&[-1]]);
    let a = (0..n).map(|_| one.clone()).collect();
    let b = (0..n)
        .map(|i| {
            if in_rotation_subgroup(i) {
                one.clone()
            } else {
                minus.clone()
            }
        })
        .collect();
    let d3 = (0..n).map(|i| d3_images[class_of(TD_LABELS[i])].clone()).collect();
    let td: Vec<Matrix<QuadNumber>> = td_matrices();
    let tdp = td
        .iter()
        .enumerate()
        .map(|(i, m)| {
            if in_rotation_subgroup(i) {
                m.clone()
            } else {
                m.scale(&QuadNumber::from(-1))
            }
        })
        .collect();
    let mats = [a, b, d3, td, tdp];
    TD_IRREP_NAMES
        .iter()
        .zip(mats)
        .map(|(name, m)| Representation::new(&group, name, m).expect("fixture irrep"))
        .collect()
}

/// A reference CG transform together with the factors it maps to, in block
/// order.
pub struct CgFixture {
    pub name: &'static str,
    pub left: &'static str,
    pub right: &'static str,
    pub blocks: Vec<&'static str>,
    pub matrix: Matrix<QuadNumber>,
}

fn parse_rows(rows: &[&[&str]], prefactor: &str) -> Matrix<QuadNumber> {
    let pre: QuadNumber = prefactor.parse().unwrap();
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|v| &pre * &v.parse::<QuadNumber>().unwrap()).collect())
            .collect(),
    )
}

/// Reference transforms for B x D3, D3 x D3, D3 x Td (and D3 x Td'),
/// Td x Td (and Td' x Td') and Td x Td' (and Td' x Td).
pub fn td_cg_fixtures() -> Vec<CgFixture> {
    let bd3 = parse_rows(&[&["0", "1"], &["-1", "0"]], "1");
    let d3d3 = parse_rows(
        &[
            &["1", "0", "-1", "0"],
            &["0", "-1", "0", "1"],
            &["0", "1", "0", "1"],
            &["1", "0", "1", "0"],
        ],
        "1",
    );
    let r3 = "sqrt(3)";
    let m3 = "-sqrt(3)";
    let d3t = parse_rows(
        &[
            &["-2", "0", "0", "0", "0", "0"],
            &["0", "1", "0", "0", r3, "0"],
            &["0", "0", "1", "0", "0", m3],
            &["0", "0", "0", "2", "0", "0"],
            &["0", r3, "0", "0", "-1", "0"],
            &["0", "0", m3, "0", "0", "-1"],
        ],
        "1/2",
    );
    let r2 = "sqrt(2)";
    let tt = parse_rows(
        &[
            &[r2, "-2", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", r3, "0", "0", r3],
            &["0", "0", "0", "0", r3, "0", "0", m3, "0"],
            &["0", "0", "0", "0", "0", r3, "0", "0", m3],
            &[r2, "1", r3, "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", r3, "0", "0", r3, "0", "0"],
            &["0", "0", "0", "0", r3, "0", "0", r3, "0"],
            &["0", "0", "0", r3, "0", "0", m3, "0", "0"],
            &[r2, "1", m3, "0", "0", "0", "0", "0", "0"],
        ],
        "1/sqrt(6)",
    );
    let ttp = parse_rows(
        &[
            &[r2, "0", "-2", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", r3, "0", "0", r3],
            &["0", "0", "0", "0", m3, "0", "0", r3, "0"],
            &["0", "0", "0", "0", "0", m3, "0", "0", r3],
            &[r2, m3, "1", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", r3, "0", "0", r3, "0", "0"],
            &["0", "0", "0", "0", r3, "0", "0", r3, "0"],
            &["0", "0", "0", m3, "0", "0", r3, "0", "0"],
            &[r2, r3, "1", "0", "0", "0", "0", "0", "0"],
        ],
        "1/sqrt(6)",
    );
    vec![
        CgFixture {
            name: "C^{BD3}",
            left: "B",
            right: "D3",
            blocks: vec!["D3"],
            matrix: bd3,
        },
        CgFixture {
            name: "C^{D3D3}",
            left: "D3",
            right: "D3",
            blocks: vec!["A", "B", "D3"],
            matrix: d3d3,
        },
        CgFixture {
            name: "C^{D3T}",
            left: "D3",
            right: "Td",
            blocks: vec!["Td", "Td'"],
            matrix: d3t.clone(),
        },
        CgFixture {
            name: "C^{D3T}",
            left: "D3",
            right: "Td'",
            blocks: vec!["Td'", "Td"],
            matrix: d3t,
        },
        CgFixture {
            name: "C^{TT}",
            left: "Td",
            right: "Td",
            blocks: vec!["A", "D3", "Td", "Td'"],
            matrix: tt.clone(),
        },
        CgFixture {
            name: "C^{TT}",
            left: "Td'",
            right: "Td'",
            blocks: vec!["A", "D3", "Td", "Td'"],
            matrix: tt,
        },
        CgFixture {
            name: "C^{TT'}",
            left: "Td",
            right: "Td'",
            blocks: vec!["B", "D3", "Td", "Td'"],
            matrix: ttp.clone(),
        },
        CgFixture {
            name: "C^{TT'}",
            left: "Td'",
            right: "Td",
            blocks: vec!["B", "D3", "Td", "Td'"],
            matrix: ttp,
        },
    ]
}

/// Normalised matrix elements `sqrt(m/g) D_uv(R)` per irrep and `(u, v)`,
/// columns in fixture element order.
pub const TD_GROUP_SPACE: &[(&str, usize, usize, &str)] = &[
    ("A", 1, 1, "1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24)"),
    ("B", 1, 1, "1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24) 1/sqrt(24)"),
    ("D3", 1, 1, "1/sqrt(12) 1/sqrt(12) 1/sqrt(12) 1/sqrt(12) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) 1/sqrt(12) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) 1/sqrt(12) 1/sqrt(12) 1/sqrt(12) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12))"),
    ("D3", 1, 2, "0 0 0 0 -1/4 -1/4 -1/4 -1/4 1/4 1/4 1/4 1/4 0 -1/4 1/4 1/4 -1/4 0 0 0 1/4 1/4 -1/4 -1/4"),
    ("D3", 2, 1, "0 0 0 0 1/4 1/4 1/4 1/4 -1/4 -1/4 -1/4 -1/4 0 -1/4 1/4 1/4 -1/4 0 0 0 1/4 1/4 -1/4 -1/4"),
    ("D3", 2, 2, "1/sqrt(12) 1/sqrt(12) 1/sqrt(12) 1/sqrt(12) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/(2*sqrt(12)) -1/sqrt(12) 1/(2*sqrt(12)) 1/(2*sqrt(12)) 1/(2*sqrt(12)) 1/(2*sqrt(12)) -1/sqrt(12) -1/sqrt(12) -1/sqrt(12) 1/(2*sqrt(12)) 1/(2*sqrt(12)) 1/(2*sqrt(12)) 1/(2*sqrt(12))"),
    ("Td", 1, 1, "1/sqrt(8) 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 0 0 0 0 0 0 0 0 1/sqrt(8) 0 0 0 0 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 0 0 0 0"),
    ("Td", 1, 2, "0 0 0 0 1/sqrt(8) -1/sqrt(8) 1/sqrt(8) -1/sqrt(8) 0 0 0 0 0 -1/sqrt(8) 0 0 1/sqrt(8) 0 0 0 0 0 -1/sqrt(8) 1/sqrt(8)"),
    ("Td", 1, 3, "0 0 0 0 0 0 0 0 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 -1/sqrt(8) 1/sqrt(8) 0 0 0 0 -1/sqrt(8) 1/sqrt(8) 0 0"),
    ("Td", 2, 1, "0 0 0 0 0 0 0 0 1/sqrt(8) -1/sqrt(8) 1/sqrt(8) -1/sqrt(8) 0 -1/sqrt(8) 0 0 1/sqrt(8) 0 0 0 0 0 1/sqrt(8) -1/sqrt(8)"),
    ("Td", 2, 2, "1/sqrt(8) -1/sqrt(8) 1/sqrt(8) -1/sqrt(8) 0 0 0 0 0 0 0 0 0 0 1/sqrt(8) 1/sqrt(8) 0 0 0 0 -1/sqrt(8) -1/sqrt(8) 0 0"),
    ("Td", 2, 3, "0 0 0 0 1/sqrt(8) 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 0 0 0 0 -1/sqrt(8) 0 0 0 0 1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 0 0"),
    ("Td", 3, 1, "0 0 0 0 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 0 0 0 0 -1/sqrt(8) 1/sqrt(8) 0 0 0 0 1/sqrt(8) -1/sqrt(8) 0 0"),
    ("Td", 3, 2, "0 0 0 0 0 0 0 0 1/sqrt(8) 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 0 0 0 0 1/sqrt(8) 1/sqrt(8) -1/sqrt(8) 0 0 0 0"),
    ("Td", 3, 3, "1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 0 0 0 0 0 0 0 1/sqrt(8) 0 0 1/sqrt(8) 0 0 0 0 0 -1/sqrt(8) -1/sqrt(8)"),
    ("Td'", 1, 1, "1/sqrt(8) 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 0 0 0 0 0 0 0 0 -1/sqrt(8) 0 0 0 0 -1/sqrt(8) 1/sqrt(8) 1/sqrt(8) 0 0 0 0"),
    ("Td'", 1, 2, "0 0 0 0 1/sqrt(8) -1/sqrt(8) 1/sqrt(8) -1/sqrt(8) 0 0 0 0 0 1/sqrt(8) 0 0 -1/sqrt(8) 0 0 0 0 0 1/sqrt(8) -1/sqrt(8)"),
    ("Td'", 1, 3, "0 0 0 0 0 0 0 0 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 1/sqrt(8) -1/sqrt(8) 0 0 0 0 1/sqrt(8) -1/sqrt(8) 0 0"),
    ("Td'", 2, 1, "0 0 0 0 0 0 0 0 1/sqrt(8) -1/sqrt(8) 1/sqrt(8) -1/sqrt(8) 0 1/sqrt(8) 0 0 -1/sqrt(8) 0 0 0 0 0 -1/sqrt(8) 1/sqrt(8)"),
    ("Td'", 2, 2, "1/sqrt(8) -1/sqrt(8) 1/sqrt(8) -1/sqrt(8) 0 0 0 0 0 0 0 0 0 0 -1/sqrt(8) -1/sqrt(8) 0 0 0 0 1/sqrt(8) 1/sqrt(8) 0 0"),
    ("Td'", 2, 3, "0 0 0 0 1/sqrt(8) 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 0 0 0 0 1/sqrt(8) 0 0 0 0 -1/sqrt(8) 1/sqrt(8) -1/sqrt(8) 0 0 0 0"),
    ("Td'", 3, 1, "0 0 0 0 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 0 0 0 0 1/sqrt(8) -1/sqrt(8) 0 0 0 0 -1/sqrt(8) 1/sqrt(8) 0 0"),
    ("Td'", 3, 2, "0 0 0 0 0 0 0 0 1/sqrt(8) 1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 0 0 -1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 0 0"),
    ("Td'", 3, 3, "1/sqrt(8) -1/sqrt(8) -1/sqrt(8) 1/sqrt(8) 0 0 0 0 0 0 0 0 0 -1/sqrt(8) 0 0 -1/sqrt(8) 0 0 0 0 0 1/sqrt(8) 1/sqrt(8)"),
];

/// Normalised characters `sqrt(n(a)/g) chi_a` per irrep.
pub const TD_CLASS_SPACE: [(&str, [&str; 5]); 5] = [
    ("A", ["1/sqrt(24)", "1/sqrt(8)", "1/sqrt(3)", "1/2", "1/2"]),
    ("B", ["1/sqrt(24)", "1/sqrt(8)", "1/sqrt(3)", "-1/2", "-1/2"]),
    ("D3", ["1/sqrt(6)", "1/sqrt(2)", "-1/sqrt(3)", "0", "0"]),
    ("Td", ["3/sqrt(24)", "-1/sqrt(8)", "0", "1/2", "-1/2"]),
    ("Td'", ["3/sqrt(24)", "-1/sqrt(8)", "0", "-1/2", "1/2"]),
];

/// Parses a whitespace separated row of fixture scalars.
pub fn parse_fixture_row(row: &str) -> Vec<QuadNumber> {
    row.split_whitespace()
        .map(|t| t.parse().expect("fixture scalar"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_reproduces_the_fixture() {
        let g = td_group();
        assert_eq!(g.order(), 24);
        for (i, m) in td_matrices::<QuadNumber>().into_iter().enumerate() {
            assert_eq!(g.element(i), &GroupElement::Matrix(m));
            assert_eq!(g.label(i), TD_LABELS[i]);
        }
        assert!(g.table_matches_elements());
    }

    #[test]
    fn also_closes_over_floats() {
        let g = td_group_over::<f64>().unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.table(), td_group().table());
    }

    #[test]
    fn fixture_irreps_are_homomorphisms() {
        for rep in td_irreps() {
            assert!(rep.is_homomorphism(), "{}", rep.name());
        }
    }

    #[test]
    fn vertex_action_is_defined() {
        let g = td_group();
        for el in g.elements() {
            assert!(vertex_permutation(el.as_matrix().unwrap()).is_some());
        }
    }
}
