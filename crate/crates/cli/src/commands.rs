use std::collections::BTreeMap;

use serde_json::{json, Value};

use grouprep::algebra::{
    central_idempotents_ok, ideals, irreducible_basis, is_left_invariant, is_right_invariant, verify_basis_laws,
};
use grouprep::chartable::{character_table, name_rows_from};
use grouprep::clebsch::{
    cg_matrix, cg_scaling, cg_series, intertwines, regular_commute, regular_reduction, regular_representation,
    verify_regular_reduction, RegularKind,
};
use grouprep::fixture::{td_cg_fixtures, td_irreps};
use grouprep::irreps::{
    construct_irreps, verify_class_space_orthonormality, verify_group_space_orthonormality, OrthoReport,
};
use grouprep::poly::{act, function_basis};
use grouprep::repr::{character_of, decompose};
use grouprep::structure::{
    conjugacy_classes, cosets, generating_pairs, generating_pairs_by_maximal, is_subgroup, quotient_group,
    reciprocal_class, subgroup_lattice, Side, DEFAULT_LATTICE_BOUND,
};
use grouprep::{CharacterTable, Group, Matrix, QuadNumber, Representation};

use crate::input::{same_irrep_name, subgroup_spec, Input};
use crate::report::{grid, labels_of, matrix_cells, matrix_json, matrix_text, set_text, Report};
use crate::{CliError, Command, SideArg};

pub fn run(command: &Command, input: &Input) -> Result<Report, CliError> {
    let mut report = match command {
        Command::Table => table(&input.group),
        Command::Orders => orders(&input.group),
        Command::Classes => classes(&input.group),
        Command::Subgroups { bound } => subgroups(&input.group, *bound)?,
        Command::Normal => normal(&input.group)?,
        Command::Cosets { subgroup, side } => coset_command(&input.group, subgroup, *side)?,
        Command::Quotient { subgroup } => quotient(&input.group, subgroup)?,
        Command::Genpairs { count_only } => genpairs(&input.group, *count_only)?,
        Command::Chartable => chartable(input)?,
        Command::Irreps => irreps_command(input)?,
        Command::Orthocheck => orthocheck(input)?,
        Command::Cg {
            left: Some(l),
            right: Some(r),
        } => cg_product(input, l, r)?,
        Command::Cg { .. } => cg_table(input)?,
        Command::Regular { intrinsic } => regular(input, *intrinsic)?,
        Command::Idempotents => idempotents(input)?,
        Command::Funcbasis { irrep, seed } => funcbasis(input, irrep, seed)?,
    };
    let mut inputs = match report.inputs.take() {
        Value::Object(m) => m,
        _ => serde_json::Map::new(),
    };
    inputs.insert("source".into(), json!(input.source));
    report.inputs = Value::Object(inputs);
    Ok(report)
}

/// The character table with its irreps, rows and irreps in the same order.
struct Irreps {
    table: CharacterTable,
    irreps: Vec<Representation>,
}

fn load_irreps(input: &Input) -> Result<Irreps, CliError> {
    let group = &input.group;
    let mut table = character_table(group)?;
    let irreps = if input.fixture {
        let reps = td_irreps();
        name_rows_from(&mut table, &reps)?;
        let mut ordered = Vec::with_capacity(reps.len());
        for row in &table.rows {
            let rep = reps
                .iter()
                .find(|r| r.name() == row.rep_name)
                .ok_or_else(|| CliError::Input(format!("fixture irreps do not cover row {}", row.rep_name)))?;
            ordered.push(rep.clone());
        }
        ordered
    } else {
        construct_irreps(group, &Representation::defining(group), &table)?
    };
    Ok(Irreps { table, irreps })
}

fn find_irrep(irreps: &Irreps, name: &str) -> Result<usize, CliError> {
    irreps
        .irreps
        .iter()
        .position(|r| same_irrep_name(r.name(), name))
        .ok_or_else(|| CliError::Input(format!("unknown irrep `{name}`")))
}

fn table(g: &Group) -> Report {
    let mut r = Report::new("table");
    let labels = g.labels();
    let mut rows = vec![std::iter::once("*".to_string())
        .chain(labels.iter().cloned())
        .collect::<Vec<_>>()];
    let mut products = Vec::with_capacity(g.order());
    for (i, label) in labels.iter().enumerate() {
        let row: Vec<String> = (0..g.order()).map(|j| g.label(g.mul(i, j)).to_string()).collect();
        rows.push(std::iter::once(label.clone()).chain(row.iter().cloned()).collect());
        products.push(row);
    }
    r.text = grid(&rows);
    r.csv = rows;
    r.result = json!({ "labels": labels, "table": products });
    r.check("latin square", g.is_latin_square());
    r.check("associative", g.is_associative());
    r.check(
        "identity first",
        (0..g.order()).all(|j| g.mul(0, j) == j && g.mul(j, 0) == j),
    );
    r
}

fn orders(g: &Group) -> Report {
    let mut r = Report::new("orders");
    let n = g.order();
    let per: Vec<usize> = (0..n).map(|i| g.element_order(i)).collect();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &o in &per {
        *counts.entry(o).or_default() += 1;
    }
    let mut rows = vec![vec!["element".to_string(), "order".to_string()]];
    rows.extend((0..n).map(|i| vec![g.label(i).to_string(), per[i].to_string()]));
    r.text = grid(&rows);
    r.text.push('\n');
    r.text.push_str(&grid(
        &std::iter::once(vec!["order".to_string(), "count".to_string()])
            .chain(counts.iter().map(|(o, c)| vec![o.to_string(), c.to_string()]))
            .collect::<Vec<_>>(),
    ));
    r.csv = rows;
    r.result = json!({
        "elements": (0..n).map(|i| json!({ "label": g.label(i), "order": per[i] })).collect::<Vec<_>>(),
        "counts": counts.iter().map(|(o, c)| json!({ "order": o, "count": c })).collect::<Vec<_>>(),
    });
    r.check("element orders divide the group order", per.iter().all(|o| n % o == 0));
    r
}

fn classes(g: &Group) -> Report {
    let mut r = Report::new("classes");
    let cs = conjugacy_classes(g);
    let mut rows = vec![vec![
        "class".into(),
        "size".into(),
        "self-reciprocal".into(),
        "members".into(),
    ]];
    let mut out = Vec::new();
    for (k, c) in cs.iter().enumerate() {
        let recip = reciprocal_class(g, c) == *c;
        rows.push(vec![
            format!("C{}", k + 1),
            c.size().to_string(),
            recip.to_string(),
            set_text(g, &c.members),
        ]);
        out.push(json!({
            "representative": g.label(c.representative),
            "size": c.size(),
            "self_reciprocal": recip,
            "members": labels_of(g, &c.members),
        }));
    }
    r.text = grid(&rows);
    r.csv = rows
        .into_iter()
        .map(|mut row| {
            let members = row.pop().unwrap();
            row.push(members.trim_matches(|c| c == '{' || c == '}').replace(", ", " "));
            row
        })
        .collect();
    r.result = json!({ "classes": out });
    let n = g.order();
    r.check(
        "class sizes sum to the group order",
        cs.iter().map(|c| c.size()).sum::<usize>() == n,
    );
    r.check(
        "class sizes divide the group order",
        cs.iter().all(|c| n % c.size() == 0),
    );
    r
}

fn subgroup_rows(g: &Group, subs: &[grouprep::structure::Subgroup]) -> (Vec<Vec<String>>, Vec<Value>) {
    let mut rows = vec![vec!["order".into(), "normal".into(), "cyclic".into(), "members".into()]];
    let mut out = Vec::new();
    for s in subs {
        let cyclic = s.members.iter().any(|&x| g.element_order(x) == s.order());
        rows.push(vec![
            s.order().to_string(),
            s.is_normal.to_string(),
            cyclic.to_string(),
            set_text(g, &s.members),
        ]);
        out.push(json!({
            "order": s.order(),
            "normal": s.is_normal,
            "cyclic": cyclic,
            "members": labels_of(g, &s.members),
        }));
    }
    (rows, out)
}

fn by_order(subs: &[grouprep::structure::Subgroup]) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for s in subs {
        *counts.entry(s.order()).or_default() += 1;
    }
    counts
}

fn counts_text(counts: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = counts.iter().map(|(o, c)| format!("order {o}: {c}")).collect();
    parts.join(", ")
}

fn subgroups(g: &Group, bound: usize) -> Result<Report, CliError> {
    let mut r = Report::new("subgroups");
    r.inputs = json!({ "bound": bound });
    let n = g.order();
    let proper: Vec<_> = subgroup_lattice(g, bound)?
        .into_iter()
        .filter(|s| s.order() > 1 && s.order() < n)
        .collect();
    let (rows, out) = subgroup_rows(g, &proper);
    let counts = by_order(&proper);
    r.text = format!(
        "{} proper nontrivial subgroups ({})\n\n{}",
        proper.len(),
        counts_text(&counts),
        grid(&rows)
    );
    r.csv = rows;
    r.result = json!({
        "count": proper.len(),
        "by_order": counts.iter().map(|(o, c)| json!({ "order": o, "count": c })).collect::<Vec<_>>(),
        "subgroups": out,
    });
    r.check(
        "every member set is closed",
        proper.iter().all(|s| is_subgroup(g, &s.members)),
    );
    r.check(
        "subgroup orders divide the group order",
        proper.iter().all(|s| n % s.order() == 0),
    );
    Ok(r)
}

fn normal(g: &Group) -> Result<Report, CliError> {
    let mut r = Report::new("normal");
    let n = g.order();
    let proper: Vec<_> = grouprep::structure::normal_subgroups(g)
        .into_iter()
        .filter(|s| s.order() > 1 && s.order() < n)
        .collect();
    let (rows, out) = subgroup_rows(g, &proper);
    r.text = format!("{} proper nontrivial normal subgroups\n\n{}", proper.len(), grid(&rows));
    r.csv = rows;
    r.result = json!({ "count": proper.len(), "subgroups": out });
    let sorted = |s: &grouprep::structure::Subgroup, side| {
        cosets(g, s, side).map(|d| {
            let mut c = d.cosets;
            c.sort();
            c
        })
    };
    let mut coincide = true;
    for s in &proper {
        coincide &= sorted(s, Side::Left)? == sorted(s, Side::Right)?;
    }
    r.check("left and right cosets coincide", coincide);
    Ok(r)
}

fn coset_command(g: &Group, spec: &str, side: SideArg) -> Result<Report, CliError> {
    let mut r = Report::new("cosets");
    let h = subgroup_spec(g, spec)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let d = cosets(g, &h, side)?;
    let side_name = if side == Side::Left { "left" } else { "right" };
    r.inputs = json!({ "subgroup": labels_of(g, &h.members), "side": side_name });
    let mut rows = vec![vec!["coset".to_string(), "members".to_string()]];
    for (k, c) in d.cosets.iter().enumerate() {
        rows.push(vec![format!("K{}", k + 1), set_text(g, c)]);
    }
    r.text = format!(
        "{} {side_name} cosets of a subgroup of order {}\n\n{}",
        d.cosets.len(),
        h.order(),
        grid(&rows)
    );
    r.csv = std::iter::once(vec!["coset".to_string(), "members".to_string()])
        .chain(
            d.cosets
                .iter()
                .enumerate()
                .map(|(k, c)| vec![format!("K{}", k + 1), labels_of(g, c).join(" ")]),
        )
        .collect();
    r.result = json!({
        "cosets": d.cosets.iter().map(|c| labels_of(g, c)).collect::<Vec<_>>(),
    });
    let mut seen = vec![0usize; g.order()];
    for c in &d.cosets {
        for &x in c {
            seen[x] += 1;
        }
    }
    r.check("cosets partition the group", seen.iter().all(|&k| k == 1));
    r.check("cosets have equal size", d.cosets.iter().all(|c| c.len() == h.order()));
    Ok(r)
}

fn quotient(g: &Group, spec: &str) -> Result<Report, CliError> {
    let mut r = Report::new("quotient");
    let h = subgroup_spec(g, spec)?;
    r.inputs = json!({ "subgroup": labels_of(g, &h.members) });
    let q = quotient_group(g, &h)?;
    let m = q.cosets.len();
    let names: Vec<String> = (0..m).map(|k| format!("K{}", k + 1)).collect();
    let iso = grouprep::iso::isomorphism_type(&q.quotient).map(|(name, _)| name);
    let mut text = format!(
        "quotient of order {m}, isomorphic to {}\n\n",
        iso.unwrap_or("no catalog group")
    );
    let legend: Vec<Vec<String>> = q
        .cosets
        .iter()
        .enumerate()
        .map(|(k, c)| vec![names[k].clone(), set_text(g, c)])
        .collect();
    text.push_str(&grid(&legend));
    text.push('\n');
    // quotient element k is coset k
    let mut rows = vec![std::iter::once("*".to_string())
        .chain(names.iter().cloned())
        .collect::<Vec<_>>()];
    let mut products = Vec::with_capacity(m);
    for a in 0..m {
        let row: Vec<String> = (0..m).map(|b| names[q.quotient.mul(a, b)].clone()).collect();
        rows.push(std::iter::once(names[a].clone()).chain(row.iter().cloned()).collect());
        products.push(row);
    }
    text.push_str(&grid(&rows));
    r.text = text;
    r.csv = rows;
    r.result = json!({
        "order": m,
        "isomorphic_to": iso,
        "cosets": q.cosets.iter().map(|c| labels_of(g, c)).collect::<Vec<_>>(),
        "names": names,
        "table": products,
    });
    r.check("quotient table is a latin square", q.quotient.is_latin_square());
    r.check("quotient is associative", q.quotient.is_associative());
    r.check("quotient order is the index", m * h.order() == g.order());
    Ok(r)
}

fn genpairs(g: &Group, count_only: bool) -> Result<Report, CliError> {
    let mut r = Report::new("genpairs");
    r.inputs = json!({ "count_only": count_only });
    let pairs = generating_pairs(g);
    if count_only {
        r.text = format!("{}\n", pairs.len());
        r.csv = vec![vec!["count".into()], vec![pairs.len().to_string()]];
        r.result = json!({ "count": pairs.len() });
    } else {
        let mut rows = vec![vec!["first".to_string(), "second".to_string()]];
        rows.extend(
            pairs
                .iter()
                .map(|&(x, y)| vec![g.label(x).to_string(), g.label(y).to_string()]),
        );
        r.text = format!("{} generating pairs\n\n{}", pairs.len(), grid(&rows));
        r.csv = rows;
        r.result = json!({
            "count": pairs.len(),
            "pairs": pairs.iter().map(|&(x, y)| [g.label(x), g.label(y)]).collect::<Vec<_>>(),
        });
    }
    if g.order() <= DEFAULT_LATTICE_BOUND {
        let lattice = subgroup_lattice(g, DEFAULT_LATTICE_BOUND)?;
        r.check(
            "closure agrees with maximal-subgroup complement",
            generating_pairs_by_maximal(g, &lattice) == pairs,
        );
    }
    Ok(r)
}

fn class_headers(g: &Group, table: &CharacterTable) -> Vec<String> {
    table
        .classes
        .iter()
        .map(|c| match c.size() {
            1 => g.label(c.representative).to_string(),
            n => format!("{n}{}", g.label(c.representative)),
        })
        .collect()
}

fn chartable(input: &Input) -> Result<Report, CliError> {
    let mut r = Report::new("chartable");
    let g = &input.group;
    let mut table = character_table(g)?;
    if input.fixture {
        name_rows_from(&mut table, &td_irreps())?;
    }
    let headers = class_headers(g, &table);
    let mut rows = vec![std::iter::once(String::new())
        .chain(headers.iter().cloned())
        .collect::<Vec<_>>()];
    for row in &table.rows {
        rows.push(
            std::iter::once(row.rep_name.clone())
                .chain(row.values.iter().map(ToString::to_string))
                .collect(),
        );
    }
    r.text = grid(&rows);
    rows[0][0] = "irrep".into();
    r.csv = rows;
    r.result = json!({
        "classes": table.classes.iter().map(|c| json!({
            "name": headers[table.classes.iter().position(|d| d == c).unwrap()],
            "size": c.size(),
            "members": labels_of(g, &c.members),
        })).collect::<Vec<_>>(),
        "rows": table.rows.iter().map(|row| json!({
            "name": row.rep_name,
            "values": row.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    r.check("rows orthogonal", table.rows_orthogonal());
    r.check("columns orthogonal", table.columns_orthogonal());
    r.check("squared degrees sum to the group order", table.sum_of_squares_ok());
    Ok(r)
}

fn inline_matrix(m: &Matrix<QuadNumber>) -> String {
    let rows: Vec<String> = matrix_cells(m).into_iter().map(|r| r.join(", ")).collect();
    format!("[{}]", rows.join("; "))
}

fn irreps_command(input: &Input) -> Result<Report, CliError> {
    let mut r = Report::new("irreps");
    let g = &input.group;
    let ir = load_irreps(input)?;
    let mut text = String::new();
    let mut csv = vec![vec![
        "irrep".to_string(),
        "element".to_string(),
        "row".to_string(),
        "entries".to_string(),
    ]];
    let mut out = Vec::new();
    for (j, rep) in ir.irreps.iter().enumerate() {
        text.push_str(&format!("{} (dimension {})\n", rep.name(), rep.dim()));
        let rows: Vec<Vec<String>> = (0..g.order())
            .map(|x| vec![format!("  {}", g.label(x)), inline_matrix(rep.matrix(x))])
            .collect();
        text.push_str(&grid(&rows));
        text.push('\n');
        for x in 0..g.order() {
            for (k, row) in matrix_cells(rep.matrix(x)).into_iter().enumerate() {
                csv.push(
                    [
                        vec![rep.name().to_string(), g.label(x).to_string(), (k + 1).to_string()],
                        row,
                    ]
                    .concat(),
                );
            }
        }
        out.push(json!({
            "name": rep.name(),
            "dim": rep.dim(),
            "matrices": (0..g.order()).map(|x| json!({
                "element": g.label(x),
                "matrix": matrix_json(rep.matrix(x)),
            })).collect::<Vec<_>>(),
        }));
        r.check(format!("{} is a homomorphism", rep.name()), rep.is_homomorphism());
        let chi = character_of(rep, &ir.table.classes)?;
        r.check(
            format!("{} has the tabulated character", rep.name()),
            chi.values == ir.table.rows[j].values,
        );
    }
    let total: usize = ir.irreps.iter().map(|d| d.dim() * d.dim()).sum();
    r.check("squared dimensions sum to the group order", total == g.order());
    r.text = text;
    r.csv = csv;
    r.result = json!({ "irreps": out });
    Ok(r)
}

fn ortho_json(rep: &OrthoReport, columns: &[String]) -> Value {
    json!({
        "rows": rep.row_labels,
        "columns": columns,
        "matrix": rep.matrix.as_ref().map(matrix_json),
        "rows_orthonormal": rep.rows_orthonormal,
        "columns_orthonormal": rep.columns_orthonormal,
        "max_deviation": rep.max_deviation.to_string(),
    })
}

fn ortho_rows(rep: &OrthoReport, columns: &[String]) -> Vec<Vec<String>> {
    let mut rows = vec![std::iter::once(String::new())
        .chain(columns.iter().cloned())
        .collect::<Vec<_>>()];
    if let Some(m) = &rep.matrix {
        for (label, cells) in rep.row_labels.iter().zip(matrix_cells(m)) {
            rows.push(std::iter::once(label.clone()).chain(cells).collect());
        }
    }
    rows
}

fn orthocheck(input: &Input) -> Result<Report, CliError> {
    let mut r = Report::new("orthocheck");
    let g = &input.group;
    let ir = load_irreps(input)?;
    let u = verify_group_space_orthonormality(&ir.irreps)?;
    let v = verify_class_space_orthonormality(&ir.table);
    let elements = g.labels().to_vec();
    let classes = class_headers(g, &ir.table);
    let u_rows = ortho_rows(&u, &elements);
    let v_rows = ortho_rows(&v, &classes);
    let unavailable = |rep: &OrthoReport| {
        if rep.matrix.is_none() {
            "entries need square roots outside the field; Gram sums checked directly\n"
        } else {
            ""
        }
    };
    r.text = format!(
        "group space U\n\n{}{}\nclass space V\n\n{}{}",
        unavailable(&u),
        grid(&u_rows),
        unavailable(&v),
        grid(&v_rows)
    );
    let tag = |t: &'static str, rows: Vec<Vec<String>>| {
        rows.into_iter()
            .map(move |row| std::iter::once(t.to_string()).chain(row).collect::<Vec<_>>())
    };
    r.csv = tag("U", u_rows).chain(tag("V", v_rows)).collect();
    r.result = json!({ "group_space": ortho_json(&u, &elements), "class_space": ortho_json(&v, &classes) });
    r.check("U rows orthonormal", u.rows_orthonormal);
    r.check("U columns orthonormal", u.columns_orthonormal);
    r.check("V rows orthonormal", v.rows_orthonormal);
    r.check("V columns orthonormal", v.columns_orthonormal);
    Ok(r)
}

fn cg_table(input: &Input) -> Result<Report, CliError> {
    let mut r = Report::new("cg");
    let ir = load_irreps(input)?;
    let names: Vec<&str> = ir.irreps.iter().map(|d| d.name()).collect();
    let dims = ir.table.dims();
    let k = names.len();
    let mut products = Vec::new();
    let mut columns = Vec::new();
    let mut dims_ok = true;
    for a in 0..k {
        for b in a..k {
            let series = cg_series(&ir.table, a, b)?;
            dims_ok &= series.iter().zip(&dims).map(|(x, m)| x * m).sum::<usize>() == dims[a] * dims[b];
            products.push(format!("{}x{}", names[a], names[b]));
            columns.push(series);
        }
    }
    let mut rows = vec![std::iter::once(String::new())
        .chain(products.iter().cloned())
        .collect::<Vec<_>>()];
    for (j, name) in names.iter().enumerate() {
        rows.push(
            std::iter::once(name.to_string())
                .chain(columns.iter().map(|c| c[j].to_string()))
                .collect(),
        );
    }
    r.text = grid(&rows);
    rows[0][0] = "irrep".into();
    r.csv = rows;
    r.result = json!({
        "irreps": names,
        "products": products.iter().zip(&columns).map(|(p, c)| json!({ "product": p, "series": c })).collect::<Vec<_>>(),
    });
    r.check("series dimensions add up", dims_ok);
    Ok(r)
}

fn cg_product(input: &Input, left: &str, right: &str) -> Result<Report, CliError> {
    let mut r = Report::new("cg");
    let ir = load_irreps(input)?;
    let li = find_irrep(&ir, left)?;
    let ri = find_irrep(&ir, right)?;
    let (lrep, rrep) = (&ir.irreps[li], &ir.irreps[ri]);
    r.inputs = json!({ "left": lrep.name(), "right": rrep.name() });
    let d = cg_matrix(lrep, rrep, &ir.irreps, &ir.table)?;
    let product = lrep.tensor(rrep)?;
    let blocks: Vec<&Representation> = d
        .block_layout
        .iter()
        .map(|(name, _)| ir.irreps.iter().find(|x| x.name() == name).unwrap())
        .collect();
    let series_text: Vec<String> = ir
        .irreps
        .iter()
        .zip(&d.series)
        .filter(|(_, &a)| a > 0)
        .map(|(x, &a)| {
            if a == 1 {
                x.name().to_string()
            } else {
                format!("{a}{}", x.name())
            }
        })
        .collect();
    let layout: Vec<&str> = d.block_layout.iter().map(|(n, _)| n.as_str()).collect();
    let mut text = format!(
        "{} x {} = {}\nblocks: {}\n\nC =\n{}",
        lrep.name(),
        rrep.name(),
        series_text.join(" + "),
        layout.join(", "),
        matrix_text(&d.matrix)
    );
    r.check(
        "C block-diagonalises the product",
        intertwines(&product, &d.matrix, &blocks)?,
    );

    let mut references = Vec::new();
    if input.fixture {
        for f in td_cg_fixtures() {
            if !(same_irrep_name(f.left, lrep.name()) && same_irrep_name(f.right, rrep.name())) {
                continue;
            }
            let fblocks = f
                .blocks
                .iter()
                .map(|b| {
                    ir.irreps
                        .iter()
                        .find(|x| same_irrep_name(x.name(), b))
                        .ok_or_else(|| CliError::Input(b.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let exact = intertwines(&product, &f.matrix, &fblocks)?;
            let scaling = cg_scaling(&product, &f.matrix, &fblocks)?;
            let factors: Option<Vec<String>> = scaling.as_ref().map(|s| s.iter().map(ToString::to_string).collect());
            text.push_str(&format!(
                "\nreference {} (blocks {}): identity {}, column scaling {}\n",
                f.name,
                f.blocks.join(", "),
                if exact { "holds" } else { "fails" },
                factors.as_ref().map_or("none".to_string(), |s| s.join(" ")),
            ));
            r.check(
                format!("reference {} satisfies the identity up to column scaling", f.name),
                scaling.is_some(),
            );
            references.push(json!({
                "name": f.name,
                "blocks": f.blocks,
                "exact": exact,
                "scaling": factors,
            }));
        }
    }
    r.text = text;
    r.csv = matrix_cells(&d.matrix);
    r.result = json!({
        "series": ir.irreps.iter().zip(&d.series).map(|(x, a)| json!({ "irrep": x.name(), "multiplicity": a })).collect::<Vec<_>>(),
        "blocks": layout,
        "matrix": matrix_json(&d.matrix),
        "references": references,
    });
    Ok(r)
}

fn regular(input: &Input, intrinsic: bool) -> Result<Report, CliError> {
    let mut r = Report::new("regular");
    r.inputs = json!({ "intrinsic": intrinsic });
    let g = &input.group;
    let ir = load_irreps(input)?;
    let kind = if intrinsic {
        RegularKind::Intrinsic
    } else {
        RegularKind::Regular
    };
    let reg = regular_representation(g, kind);
    let rep = reg.to_representation(g)?;
    let chi = character_of(&rep, &ir.table.classes)?;
    let mult = decompose(&rep, &ir.table)?;
    let x = regular_reduction(&reg, &ir.irreps, false)?;
    let reduces = verify_regular_reduction(&reg, &ir.irreps, &x)?;
    let names: Vec<&str> = ir.irreps.iter().map(|d| d.name()).collect();
    let chi_text: Vec<String> = chi.values.iter().map(ToString::to_string).collect();
    let perm_rows: Vec<Vec<String>> = (0..g.order())
        .map(|s| {
            let images: Vec<&str> = reg.permutations[s].images().iter().map(|&p| g.label(p)).collect();
            vec![format!("  {}", g.label(s)), images.join(" ")]
        })
        .collect();
    let mult_text: Vec<String> = names.iter().zip(&mult).map(|(n, m)| format!("{n}: {m}")).collect();
    r.text = format!(
        "{} representation\ncharacter: ({})\nmultiplicities: {}\n\nelement images (column R holds the image of R)\n{}\nreduction X =\n{}",
        if intrinsic { "intrinsic regular" } else { "regular" },
        chi_text.join(", "),
        mult_text.join(", "),
        grid(&perm_rows),
        matrix_text(&x)
    );
    r.csv = matrix_cells(&x);
    r.result = json!({
        "kind": if intrinsic { "intrinsic" } else { "regular" },
        "character": chi_text,
        "multiplicities": names.iter().zip(&mult).map(|(n, m)| json!({ "irrep": n, "multiplicity": m })).collect::<Vec<_>>(),
        "images": (0..g.order()).map(|s| labels_of(g, reg.permutations[s].images())).collect::<Vec<_>>(),
        "reduction": matrix_json(&x),
    });
    r.check("homomorphism", rep.is_homomorphism());
    let expected: Vec<QuadNumber> = (0..chi.values.len())
        .map(|a| QuadNumber::from(if a == 0 { g.order() as i64 } else { 0 }))
        .collect();
    r.check("character is (g, 0, ..., 0)", chi.values == expected);
    r.check("each irrep appears dimension-many times", mult == ir.table.dims());
    r.check("X reduces the representation", reduces);
    r.check("regular and intrinsic matrices commute", regular_commute(g));
    Ok(r)
}

fn idempotents(input: &Input) -> Result<Report, CliError> {
    let mut r = Report::new("idempotents");
    let g = &input.group;
    let ir = load_irreps(input)?;
    let basis = irreducible_basis(&ir.irreps)?;
    let laws = verify_basis_laws(&basis, g)?;
    let dec = ideals(&basis, g)?;
    let mut text = String::from("irreducible basis\n");
    let mut csv = vec![vec!["element".to_string(), "expansion".to_string()]];
    let mut entries = Vec::new();
    for e in &basis.entries {
        let name = format!("P[{}]{}{}", e.name, e.u + 1, e.v + 1);
        let expansion = e.element.display_with(g);
        text.push_str(&format!("  {name} = {expansion}\n"));
        csv.push(vec![name.clone(), expansion.clone()]);
        entries.push(json!({ "irrep": e.name, "u": e.u + 1, "v": e.v + 1, "expansion": expansion }));
    }
    text.push_str("\ncentral idempotents\n");
    let mut central = Vec::new();
    for (name, c) in basis.names.iter().zip(&dec.central) {
        let expansion = c.display_with(g);
        text.push_str(&format!("  P[{name}] = {expansion}\n"));
        csv.push(vec![format!("P[{name}]"), expansion.clone()]);
        central.push(json!({ "irrep": name, "expansion": expansion }));
    }
    let dims_of = |list: &[grouprep::algebra::Ideal]| list.iter().map(|i| i.dim()).collect::<Vec<_>>();
    let bilateral = dims_of(&dec.bilateral);
    text.push_str(&format!(
        "\nideal dimensions\n  left: {:?}\n  right: {:?}\n  two-sided: {:?}\n",
        dims_of(&dec.left),
        dims_of(&dec.right),
        bilateral
    ));
    text.push_str(&format!("\nbasis products checked: {}\n", laws.pairs_checked));
    r.text = text;
    r.csv = csv;
    r.result = json!({
        "basis": entries,
        "central": central,
        "ideal_dimensions": {
            "left": dims_of(&dec.left),
            "right": dims_of(&dec.right),
            "bilateral": bilateral,
        },
        "pairs_checked": laws.pairs_checked,
    });
    r.check("transitivity", laws.transitivity_failures == 0);
    r.check("orthogonality", laws.orthogonality_failures == 0);
    r.check("idempotence", laws.idempotence_failures == 0);
    r.check("diagonal elements sum to the identity", laws.completeness);
    r.check("basis spans the algebra", laws.spans);
    let mut left_ok = true;
    for i in &dec.left {
        left_ok &= is_left_invariant(i, g)?;
    }
    let mut right_ok = true;
    for i in &dec.right {
        right_ok &= is_right_invariant(i, g)?;
    }
    let mut two_sided_ok = true;
    for i in &dec.bilateral {
        two_sided_ok &= is_left_invariant(i, g)? && is_right_invariant(i, g)?;
    }
    r.check("left ideals are left invariant", left_ok);
    r.check("right ideals are right invariant", right_ok);
    r.check("two-sided ideals are invariant", two_sided_ok);
    r.check(
        "two-sided ideal dimensions are squared degrees",
        bilateral.iter().zip(&basis.dims).all(|(b, m)| *b == m * m),
    );
    r.check(
        "central idempotents are orthogonal and central",
        central_idempotents_ok(&dec.central, g)?,
    );
    Ok(r)
}

fn funcbasis(input: &Input, irrep: &str, seed: &str) -> Result<Report, CliError> {
    let mut r = Report::new("funcbasis");
    let g = &input.group;
    let ir = load_irreps(input)?;
    let d = &ir.irreps[find_irrep(&ir, irrep)?];
    let p = crate::input::polynomial(seed)?;
    r.inputs = json!({ "irrep": d.name(), "seed": p.to_string() });
    let basis = function_basis(g, d, &p)?;
    let texts: Vec<String> = basis.iter().map(ToString::to_string).collect();
    r.text = texts
        .iter()
        .enumerate()
        .map(|(u, t)| format!("f{} = {t}\n", u + 1))
        .collect();
    r.csv = std::iter::once(vec!["index".to_string(), "function".to_string()])
        .chain(
            texts
                .iter()
                .enumerate()
                .map(|(u, t)| vec![(u + 1).to_string(), t.clone()]),
        )
        .collect();
    r.result = json!({ "basis": texts });
    // R f_u = sum_k D_ku(R) f_k
    let mut covariant = true;
    for x in 0..g.order() {
        let m = g.element(x).as_matrix().ok_or(grouprep::Error::MixedKind)?;
        for (u, f) in basis.iter().enumerate() {
            let image = act(m, f)?;
            let expected = basis
                .iter()
                .enumerate()
                .fold(grouprep::QPolynomial::zero(), |acc, (k, fk)| {
                    &acc + &fk.scale(&d.matrix(x)[(k, u)])
                });
            covariant &= image == expected;
        }
    }
    r.check("basis transforms by the irrep", covariant);
    Ok(r)
}
