//! End-to-end checks on the tetrahedral group. Runs without the libtest
//! harness so that every criterion prints its own PASS/FAIL line.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use grouprep::algebra::{ideals, irreducible_basis, verify_basis_laws, AlgebraElement};
use grouprep::chartable::{character_table, name_rows_from};
use grouprep::clebsch::{
    cg_matrix, cg_scaling, cg_series, intertwines, regular_reduction, regular_representation, verify_regular_reduction,
    RegularKind,
};
use grouprep::fixture::{
    parse_fixture_row, td_cg_fixtures, td_group, td_irreps, td_matrices, vertex_permutation, TD_CLASS_SPACE,
    TD_GROUP_SPACE,
};
use grouprep::group::{GroupElement, DEFAULT_MAX_ORDER};
use grouprep::irreps::{verify_class_space_orthonormality, verify_group_space_orthonormality};
use grouprep::iso::{catalog, find_isomorphism, is_isomorphism};
use grouprep::parse::parse_polynomial;
use grouprep::poly::{act, project};
use grouprep::repr::{character_of, decompose};
use grouprep::structure::{
    conjugacy_classes, cosets, generating_pairs, generating_pairs_by_maximal, normal_subgroups, quotient_group,
    reciprocal_class, subgroup_from_members, subgroup_lattice, Side, DEFAULT_LATTICE_BOUND,
};
use grouprep::{CharacterTable, Group, Matrix, QuadNumber, Representation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Fixture) -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

struct Fixture {
    g: Group,
    irreps: Vec<Representation>,
    table: CharacterTable,
}

impl Fixture {
    fn new() -> Self {
        let g = td_group();
        let irreps = td_irreps();
        let mut table = character_table(&g).expect("character table");
        name_rows_from(&mut table, &irreps).expect("row names");
        Fixture { g, irreps, table }
    }

    fn idx(&self, label: &str) -> usize {
        self.g.index_of(label).expect("fixture label")
    }

    fn set(&self, labels: &str) -> BTreeSet<usize> {
        labels.split_whitespace().map(|l| self.idx(l)).collect()
    }

    fn irrep(&self, name: &str) -> &Representation {
        self.irreps.iter().find(|r| r.name() == name).expect("fixture irrep")
    }
}

fn q(text: &str) -> QuadNumber {
    text.parse().expect("scalar")
}

fn closure(_: &Fixture) -> Outcome {
    let r1 = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
    let a = Matrix::from_ints(&[&[1, 0, 0], &[0, 0, -1], &[0, -1, 0]]);
    let g: Group = Group::close_generators(&[GroupElement::Matrix(r1), GroupElement::Matrix(a)], DEFAULT_MAX_ORDER)
        .map_err(|e| e.to_string())?;
    ensure!(g.order() == 24, "closure has {} elements", g.order());
    let expected: Vec<GroupElement> = td_matrices::<QuadNumber>()
        .into_iter()
        .map(GroupElement::Matrix)
        .collect();
    for e in &expected {
        ensure!(g.index_of_element(e).is_some(), "missing {e}");
    }
    for e in g.elements() {
        ensure!(expected.contains(e), "unexpected {e}");
    }
    Ok("24 elements, equal to the listed matrices".into())
}

fn multiplication(f: &Fixture) -> Outcome {
    ensure!(f.g.is_latin_square(), "not a latin square");
    ensure!(f.g.table_matches_elements(), "table disagrees with matrix products");
    let spots = [
        ("R1", "a", "t"),
        ("R1", "t", "v"),
        ("R1", "w", "r"),
        ("a", "Tz2", "r"),
        ("a", "Ty2", "s"),
        ("a", "R2sq", "t"),
        ("a", "R1sq", "u"),
        ("a", "R2", "v"),
        ("a", "R1", "w"),
    ];
    for (x, y, z) in spots {
        let p = f.g.mul(f.idx(x), f.idx(y));
        ensure!(p == f.idx(z), "{x}*{y} = {}, expected {z}", f.g.label(p));
    }
    Ok(format!("latin square, {} spot products", spots.len()))
}

fn orders(f: &Fixture) -> Outcome {
    let mut counts = BTreeMap::new();
    for i in 0..f.g.order() {
        *counts.entry(f.g.element_order(i)).or_insert(0) += 1;
    }
    let expected = BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]);
    ensure!(counts == expected, "order counts {counts:?}");
    let by_order = [
        (2, "Tx2 Ty2 Tz2 a b c d e f"),
        (3, "R1 R2 R3 R4 R1sq R2sq R3sq R4sq"),
        (4, "r s t u v w"),
    ];
    for (o, labels) in by_order {
        for i in f.set(labels) {
            ensure!(
                f.g.element_order(i) == o,
                "{} has order {}",
                f.g.label(i),
                f.g.element_order(i)
            );
        }
    }
    Ok("1/9/8/6 elements of order 1/2/3/4".into())
}

fn classes(f: &Fixture) -> Outcome {
    let cs = conjugacy_classes(&f.g);
    let got: BTreeSet<BTreeSet<usize>> = cs.iter().map(|c| c.members.iter().copied().collect()).collect();
    let expected: BTreeSet<BTreeSet<usize>> = [
        "E",
        "Tx2 Ty2 Tz2",
        "a b c d e f",
        "R1 R2 R3 R4 R1sq R2sq R3sq R4sq",
        "r s t u v w",
    ]
    .iter()
    .map(|s| f.set(s))
    .collect();
    ensure!(got == expected, "class memberships differ");
    for c in &cs {
        ensure!(
            reciprocal_class(&f.g, c) == *c,
            "class of {} is not self-reciprocal",
            f.g.label(c.representative)
        );
    }
    let mut sizes: Vec<usize> = cs.iter().map(|c| c.size()).collect();
    sizes.sort_unstable();
    ensure!(sizes == [1, 3, 6, 6, 8], "sizes {sizes:?}");
    Ok("sizes 1,3,8,6,6, all self-reciprocal".into())
}

fn normal(f: &Fixture) -> Outcome {
    let n = f.g.order();
    let got: BTreeSet<BTreeSet<usize>> = normal_subgroups(&f.g)
        .into_iter()
        .filter(|s| s.order() > 1 && s.order() < n)
        .map(|s| s.members.into_iter().collect())
        .collect();
    let expected: BTreeSet<BTreeSet<usize>> = [
        f.set("E Tx2 Ty2 Tz2"),
        f.set("E Tx2 Ty2 Tz2 R1 R2 R3 R4 R1sq R2sq R3sq R4sq"),
    ]
    .into();
    ensure!(got == expected, "{} proper normal subgroups found", got.len());
    Ok("V4 and T".into())
}

fn coset_sets(f: &Fixture, members: &str, side: Side) -> Result<BTreeSet<BTreeSet<usize>>, String> {
    let h = subgroup_from_members(&f.g, &f.set(members).into_iter().collect::<Vec<_>>()).map_err(|e| e.to_string())?;
    Ok(cosets(&f.g, &h, side)
        .map_err(|e| e.to_string())?
        .cosets
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect())
}

fn coset_check(f: &Fixture) -> Outcome {
    let v4 = "E Tx2 Ty2 Tz2";
    let mut expected: BTreeSet<BTreeSet<usize>> =
        ["R1 R2 R3 R4", "R1sq R2sq R3sq R4sq", "a f r s", "b e v w", "c d t u"]
            .iter()
            .map(|s| f.set(s))
            .collect();
    expected.insert(f.set(v4));
    for side in [Side::Left, Side::Right] {
        ensure!(coset_sets(f, v4, side)? == expected, "{side:?} cosets of V4 differ");
    }
    let t = "E Tx2 Ty2 Tz2 R1 R2 R3 R4 R1sq R2sq R3sq R4sq";
    let expected_t: BTreeSet<BTreeSet<usize>> = [f.set(t), f.set("a b c d e f r s t u v w")].into();
    for side in [Side::Left, Side::Right] {
        ensure!(coset_sets(f, t, side)? == expected_t, "{side:?} cosets of T differ");
    }
    Ok("five cosets of V4 and one of T, both sides".into())
}

fn quotients(f: &Fixture) -> Outcome {
    let v4 = subgroup_from_members(&f.g, &f.set("E Tx2 Ty2 Tz2").into_iter().collect::<Vec<_>>()).unwrap();
    let qt = quotient_group(&f.g, &v4).map_err(|e| e.to_string())?;

    // the printed D3 table, letters in header order
    let letters = ["E", "D", "F", "A", "B", "C"];
    let rows = [
        "E D F A B C",
        "D F E B C A",
        "F E D C A B",
        "A C B E F D",
        "B A C D E F",
        "C B A F D E",
    ];
    let pos = |s: &str| letters.iter().position(|l| *l == s).unwrap();
    let d3_table: Vec<Vec<usize>> = rows.iter().map(|r| r.split_whitespace().map(pos).collect()).collect();
    let d3 = Group::<QuadNumber>::from_table(d3_table, letters.iter().map(|s| s.to_string()).collect())
        .map_err(|e| e.to_string())?;
    let correspondence = [
        ("E Tx2 Ty2 Tz2", "E"),
        ("R1 R2 R3 R4", "D"),
        ("R1sq R2sq R3sq R4sq", "F"),
        ("a f r s", "A"),
        ("b e v w", "C"),
        ("c d t u", "B"),
    ];
    let coset_index = |members: &str| {
        let set: Vec<usize> = f.set(members).into_iter().collect();
        qt.cosets.iter().position(|c| *c == set).expect("coset")
    };
    let mut map = vec![0; 6];
    for (members, letter) in correspondence {
        map[coset_index(members)] = d3.index_of(letter).unwrap();
    }
    ensure!(
        is_isomorphism(&qt.quotient, &d3, &map),
        "correspondence is not an isomorphism"
    );

    let products = [
        ("R1 R2 R3 R4", "R1 R2 R3 R4", "R1sq R2sq R3sq R4sq"),
        ("R1 R2 R3 R4", "R1sq R2sq R3sq R4sq", "E Tx2 Ty2 Tz2"),
        ("R1 R2 R3 R4", "a f r s", "c d t u"),
        ("a f r s", "R1 R2 R3 R4", "b e v w"),
    ];
    for (x, y, z) in products {
        let prod: BTreeSet<usize> = f
            .set(x)
            .iter()
            .flat_map(|&p| f.set(y).into_iter().map(move |s| (p, s)))
            .map(|(p, s)| f.g.mul(p, s))
            .collect();
        ensure!(prod == f.set(z), "{{{x}}}{{{y}}} != {{{z}}}");
    }

    let t = subgroup_from_members(
        &f.g,
        &f.set("E Tx2 Ty2 Tz2 R1 R2 R3 R4 R1sq R2sq R3sq R4sq")
            .into_iter()
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let c2 = quotient_group(&f.g, &t).map_err(|e| e.to_string())?;
    let cyclic2 = &catalog().iter().find(|c| c.name == "C2").expect("C2 in catalog").group;
    ensure!(find_isomorphism(&c2.quotient, cyclic2).is_some(), "T_d/T is not C2");
    Ok("T_d/V4 = D3 under the printed correspondence, T_d/T = C2".into())
}

fn lattice(f: &Fixture) -> Outcome {
    let n = f.g.order();
    let got: BTreeSet<BTreeSet<usize>> = subgroup_lattice(&f.g, DEFAULT_LATTICE_BOUND)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|s| s.order() > 1 && s.order() < n)
        .map(|s| s.members.into_iter().collect())
        .collect();
    let listed = [
        "E Tx2",
        "E Ty2",
        "E Tz2",
        "E a",
        "E b",
        "E c",
        "E d",
        "E e",
        "E f",
        "E R1 R1sq",
        "E R2 R2sq",
        "E R3 R3sq",
        "E R4 R4sq",
        "E Tx2 r s",
        "E Ty2 t u",
        "E Tz2 v w",
        "E Tx2 Ty2 Tz2",
        "E a f Tx2",
        "E c d Ty2",
        "E b e Tz2",
        "E d e f R1 R1sq",
        "E b c f R2 R2sq",
        "E a c e R3 R3sq",
        "E a b d R4 R4sq",
        "E Tx2 Ty2 Tz2 a f r s",
        "E Tx2 Ty2 Tz2 c d t u",
        "E Tx2 Ty2 Tz2 b e v w",
        "E Tx2 Ty2 Tz2 R1 R2 R3 R4 R1sq R2sq R3sq R4sq",
    ];
    let expected: BTreeSet<BTreeSet<usize>> = listed.iter().map(|s| f.set(s)).collect();
    ensure!(expected.len() == 28, "listed subgroups are not distinct");
    ensure!(
        got == expected,
        "lattice has {} proper subgroups, differing from the list",
        got.len()
    );
    let mut by_order = BTreeMap::new();
    for s in &got {
        *by_order.entry(s.len()).or_insert(0) += 1;
    }
    let counts: Vec<usize> = by_order.values().copied().collect();
    ensure!(counts == [9, 4, 7, 4, 3, 1], "counts by order {counts:?}");
    Ok("28 subgroups, 9/4/7/4/3/1 by order".into())
}

fn char_table(f: &Fixture) -> Outcome {
    // column order E, 3Tk2, 8Ri, 6(a..f), 6(r..w)
    let columns = ["E", "Tx2", "R1", "a", "r"];
    let expected = [
        ("A", [1, 1, 1, 1, 1]),
        ("B", [1, 1, 1, -1, -1]),
        ("D3", [2, 2, -1, 0, 0]),
        ("Td", [3, -1, 0, 1, -1]),
        ("Td'", [3, -1, 0, -1, 1]),
    ];
    let t = character_table(&f.g).map_err(|e| e.to_string())?;
    ensure!(
        t.rows.len() == 5 && t.class_count() == 5,
        "table is {}x{}",
        t.rows.len(),
        t.class_count()
    );
    let got: BTreeSet<Vec<QuadNumber>> = (0..5)
        .map(|j| columns.iter().map(|c| t.value(j, f.idx(c)).clone()).collect())
        .collect();
    let want: BTreeSet<Vec<QuadNumber>> = expected
        .iter()
        .map(|(_, v)| v.iter().map(|&x| QuadNumber::from(x)).collect())
        .collect();
    ensure!(got == want, "rows differ");
    for (name, v) in expected {
        let j = f.table.row_index(name).map_err(|e| e.to_string())?;
        for (c, x) in columns.iter().zip(v) {
            ensure!(*f.table.value(j, f.idx(c)) == QuadNumber::from(x), "{name} at {c}");
        }
    }
    Ok("five rows equal up to ordering, named by the fixture irreps".into())
}

fn orthogonality(f: &Fixture) -> Outcome {
    let u = verify_group_space_orthonormality(&f.irreps).map_err(|e| e.to_string())?;
    ensure!(u.passed(), "U is not orthogonal (deviation {})", u.max_deviation);
    let v = verify_class_space_orthonormality(&f.table);
    ensure!(v.passed(), "V is not orthogonal (deviation {})", v.max_deviation);
    let vm = v.matrix.as_ref().ok_or("V has entries outside the field")?;
    let class_cols: Vec<usize> = ["E", "Tx2", "R1", "a", "r"]
        .iter()
        .map(|c| f.table.class_of(f.idx(c)))
        .collect();
    for (name, row) in TD_CLASS_SPACE {
        let j = f.table.row_index(name).map_err(|e| e.to_string())?;
        for (k, text) in row.iter().enumerate() {
            ensure!(
                vm[(j, class_cols[k])] == q(text),
                "V[{name}][{k}] = {}, expected {text}",
                vm[(j, class_cols[k])]
            );
        }
    }
    // the printed group-space rows agree apart from the sign of B off the
    // rotation subgroup
    let um = u.matrix.as_ref().ok_or("U has entries outside the field")?;
    let mut b_row_flips = 0;
    for (name, uu, vv, row) in TD_GROUP_SPACE {
        let label = format!("{name}[{uu}{vv}]");
        let r = u
            .row_labels
            .iter()
            .position(|l| *l == label)
            .ok_or(format!("no row {label}"))?;
        for (x, want) in parse_fixture_row(row).iter().enumerate() {
            let got = &um[(r, x)];
            if got == want {
                continue;
            }
            ensure!(
                *name == "B" && x >= 12 && *got == -want.clone(),
                "U[{label}][{x}] = {got}, printed {want}"
            );
            b_row_flips += 1;
        }
    }
    Ok(format!("U and V orthogonal, V equals the printed table, U equals the printed table except {b_row_flips} sign-flipped B entries"))
}

fn cg_series_check(f: &Fixture) -> Outcome {
    let names = ["A", "B", "D3", "Td", "Td'"];
    let columns = [
        ("A", "A", [1, 0, 0, 0, 0]),
        ("A", "B", [0, 1, 0, 0, 0]),
        ("A", "D3", [0, 0, 1, 0, 0]),
        ("A", "Td", [0, 0, 0, 1, 0]),
        ("A", "Td'", [0, 0, 0, 0, 1]),
        ("B", "B", [1, 0, 0, 0, 0]),
        ("B", "D3", [0, 0, 1, 0, 0]),
        ("B", "Td", [0, 0, 0, 0, 1]),
        ("B", "Td'", [0, 0, 0, 1, 0]),
        ("D3", "D3", [1, 1, 1, 0, 0]),
        ("D3", "Td", [0, 0, 0, 1, 1]),
        ("D3", "Td'", [0, 0, 0, 1, 1]),
        ("Td", "Td", [1, 0, 1, 1, 1]),
        ("Td", "Td'", [0, 1, 1, 1, 1]),
        ("Td'", "Td'", [1, 0, 1, 1, 1]),
    ];
    let row = |n: &str| f.table.row_index(n).unwrap();
    for (l, r, want) in columns {
        let got = cg_series(&f.table, row(l), row(r)).map_err(|e| e.to_string())?;
        for (name, w) in names.iter().zip(want) {
            ensure!(
                got[row(name)] == w,
                "{l}x{r}: multiplicity of {name} is {}",
                got[row(name)]
            );
        }
    }
    Ok("15 columns".into())
}

fn cg_matrices(f: &Fixture) -> Outcome {
    let ordered: Vec<Representation> = f.table.rows.iter().map(|r| f.irrep(&r.rep_name).clone()).collect();
    let mut built = 0;
    for a in 0..ordered.len() {
        for b in a..ordered.len() {
            let d = cg_matrix(&ordered[a], &ordered[b], &ordered, &f.table).map_err(|e| e.to_string())?;
            let product = ordered[a].tensor(&ordered[b]).map_err(|e| e.to_string())?;
            let blocks: Vec<&Representation> = d.block_layout.iter().map(|(n, _)| f.irrep(n)).collect();
            ensure!(
                intertwines(&product, &d.matrix, &blocks).map_err(|e| e.to_string())?,
                "constructed C for {}x{} fails",
                ordered[a].name(),
                ordered[b].name()
            );
            built += 1;
        }
    }
    let mut log = Vec::new();
    for fx in td_cg_fixtures() {
        let product = f.irrep(fx.left).tensor(f.irrep(fx.right)).map_err(|e| e.to_string())?;
        let blocks: Vec<&Representation> = fx.blocks.iter().map(|n| f.irrep(n)).collect();
        let exact = intertwines(&product, &fx.matrix, &blocks).map_err(|e| e.to_string())?;
        if fx.name == "C^{BD3}" {
            ensure!(exact, "{} fails its identity", fx.name);
        }
        let scale = cg_scaling(&product, &fx.matrix, &blocks)
            .map_err(|e| e.to_string())?
            .ok_or(format!(
                "{} ({}x{}) fails even with column scaling",
                fx.name, fx.left, fx.right
            ))?;
        let factors: Vec<String> = scale.iter().map(ToString::to_string).collect();
        log.push(format!("{} {}x{}: [{}]", fx.name, fx.left, fx.right, factors.join(" ")));
    }
    Ok(format!(
        "{built} constructed transforms; reference scaling factors {}",
        log.join("; ")
    ))
}

fn regular(f: &Fixture) -> Outcome {
    let ordered: Vec<Representation> = f.table.rows.iter().map(|r| f.irrep(&r.rep_name).clone()).collect();
    let dims: Vec<usize> = ordered.iter().map(|r| r.dim()).collect();
    ensure!(dims == [1, 1, 2, 3, 3], "irrep order {dims:?}");
    for kind in [RegularKind::Regular, RegularKind::Intrinsic] {
        let reg = regular_representation(&f.g, kind);
        let rep = reg.to_representation(&f.g).map_err(|e| e.to_string())?;
        ensure!(rep.is_homomorphism(), "{kind:?} is not a homomorphism");
        let chi = character_of(&rep, &f.table.classes).map_err(|e| e.to_string())?;
        let want: Vec<QuadNumber> = [24, 0, 0, 0, 0].iter().map(|&x| QuadNumber::from(x)).collect();
        ensure!(chi.values == want, "{kind:?} character {:?}", chi.values);
        let mult = decompose(&rep, &f.table).map_err(|e| e.to_string())?;
        ensure!(mult == [1, 1, 2, 3, 3], "{kind:?} multiplicities {mult:?}");
        for normalized in [false, true] {
            let x = regular_reduction(&reg, &ordered, normalized).map_err(|e| e.to_string())?;
            ensure!(
                verify_regular_reduction(&reg, &ordered, &x).map_err(|e| e.to_string())?,
                "{kind:?} reduction fails"
            );
        }
    }
    Ok("both homomorphisms, character (24,0,0,0,0), blocks (1,1,2,3,3)".into())
}

fn algebra(f: &Fixture) -> Outcome {
    let basis = irreducible_basis(&f.irreps).map_err(|e| e.to_string())?;
    let name_index = |n: &str| basis.names.iter().position(|x| x == n).unwrap();
    let pa = basis.get(name_index("A"), 0, 0);
    let pb = basis.get(name_index("B"), 0, 0);
    let c = q("1/24");
    let expected_a = AlgebraElement::from_dense(&vec![c.clone(); 24]);
    let expected_b = AlgebraElement::from_dense(
        &(0..24)
            .map(|i| if i < 12 { c.clone() } else { -c.clone() })
            .collect::<Vec<_>>(),
    );
    ensure!(*pa == expected_a, "P^A_11 = {}", pa.display_with(&f.g));
    ensure!(*pb == expected_b, "P^B_11 = {}", pb.display_with(&f.g));
    let laws = verify_basis_laws(&basis, &f.g).map_err(|e| e.to_string())?;
    ensure!(laws.pairs_checked == 576, "{} pairs checked", laws.pairs_checked);
    ensure!(laws.passed(), "laws fail: {laws:?}");
    let dec = ideals(&basis, &f.g).map_err(|e| e.to_string())?;
    let dims: BTreeMap<&str, usize> = dec.bilateral.iter().map(|i| (i.name.as_str(), i.dim())).collect();
    let want = BTreeMap::from([("A", 1), ("B", 1), ("D3", 4), ("Td", 9), ("Td'", 9)]);
    ensure!(dims == want, "two-sided ideal dimensions {dims:?}");
    for l in dec.left.iter().chain(&dec.right) {
        ensure!(
            l.dim() == f.irrep(&l.name).dim(),
            "one-sided ideal of {} has dimension {}",
            l.name,
            l.dim()
        );
    }
    Ok("P^A_11, P^B_11 as printed; 576 products; ideal dimensions 1,1,4,9,9".into())
}

fn functions(f: &Fixture) -> Outcome {
    let psi = parse_polynomial("(x+y+z)^2").map_err(|e| e.to_string())?;
    let images = [
        ("Tx2", "(x-y-z)^2"),
        ("Ty2", "(-x+y-z)^2"),
        ("Tz2", "(-x-y+z)^2"),
        ("R1", "(x+y+z)^2"),
    ];
    for (label, want) in images {
        let m = f.g.element(f.idx(label)).as_matrix().unwrap();
        let got = act(m, &psi).map_err(|e| e.to_string())?;
        ensure!(got == parse_polynomial(want).unwrap(), "P_{label} psi = {got}");
    }
    let td = f.irrep("Td");
    let want = ["2*y*z", "2*x*z", "2*x*y"];
    for (u, w) in want.iter().enumerate() {
        let got = project(&f.g, td, u, 0, &psi).map_err(|e| e.to_string())?;
        ensure!(got == parse_polynomial(w).unwrap(), "P_{}1 psi = {got}", u + 1);
    }
    Ok("images of psi and the basis 2yz, 2xz, 2xy".into())
}

fn isomorphism(f: &Fixture) -> Outcome {
    let perms: BTreeSet<Vec<usize>> =
        f.g.elements()
            .iter()
            .map(|e| vertex_permutation(e.as_matrix().unwrap()).map(|p| p.images().to_vec()))
            .collect::<Option<_>>()
            .ok_or("an element does not permute the vertices")?;
    ensure!(perms.len() == 24, "image has {} permutations", perms.len());
    let s4 = &catalog().iter().find(|c| c.name == "S4").expect("S4 in catalog").group;
    let map = find_isomorphism(&f.g, s4).ok_or("no isomorphism to S4")?;
    ensure!(is_isomorphism(&f.g, s4, &map), "reported map is not an isomorphism");
    Ok("vertex action is all 24 permutations of 4 letters".into())
}

fn generating(f: &Fixture) -> Outcome {
    let pairs = generating_pairs(&f.g);
    let lattice = subgroup_lattice(&f.g, DEFAULT_LATTICE_BOUND).map_err(|e| e.to_string())?;
    ensure!(
        generating_pairs_by_maximal(&f.g, &lattice) == pairs,
        "closure and maximal-subgroup rule disagree"
    );
    let set: BTreeSet<(usize, usize)> = pairs.iter().copied().collect();
    let key = |x: usize, y: usize| (x.min(y), x.max(y));
    ensure!(set.contains(&key(f.idx("R1"), f.idx("a"))), "{{R1, a}} missing");
    let n = f.g.order();
    for s in lattice.iter().filter(|s| s.order() < n) {
        for (i, &x) in s.members.iter().enumerate() {
            for &y in &s.members[i + 1..] {
                ensure!(
                    !set.contains(&key(x, y)),
                    "{} {} lie in a proper subgroup",
                    f.g.label(x),
                    f.g.label(y)
                );
            }
        }
    }
    // the printed families of generating pairs
    let families = [
        ("R1 R1sq", "a b c r s t u v w"),
        ("R2 R2sq", "a d e r s t u v w"),
        ("R3 R3sq", "b d f r s t u v w"),
        ("R4 R4sq", "c e f r s t u v w"),
        ("a f r s", "t u v w"),
        ("b e", "r s t u"),
        ("c d", "r s v w"),
        ("t u", "v w"),
    ];
    let listed: BTreeSet<(usize, usize)> = families
        .iter()
        .flat_map(|(x, y)| {
            let ys = f.set(y);
            f.set(x)
                .into_iter()
                .flat_map(move |a| ys.clone().into_iter().map(move |b| key(a, b)))
        })
        .collect();
    ensure!(
        listed == set,
        "printed families give {} pairs, closure gives {}",
        listed.len(),
        set.len()
    );
    Ok(format!(
        "{} pairs, equal by both methods and to the printed families",
        set.len()
    ))
}

fn main() -> ExitCode {
    let fixture = Fixture::new();
    let criteria: [Criterion; 17] = [
        ("closure of {R1, a}", closure),
        ("multiplication table", multiplication),
        ("element orders", orders),
        ("conjugacy classes", classes),
        ("normal subgroups", normal),
        ("cosets", coset_check),
        ("quotient groups", quotients),
        ("subgroup lattice", lattice),
        ("character table", char_table),
        ("orthogonality and completeness", orthogonality),
        ("CG series", cg_series_check),
        ("CG matrices", cg_matrices),
        ("regular representations", regular),
        ("group algebra", algebra),
        ("function bases", functions),
        ("isomorphism with S4", isomorphism),
        ("generating pairs", generating),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check(&fixture) {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("\n{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
