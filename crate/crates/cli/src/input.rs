use std::fs;
use std::path::Path;

use grouprep::genfile::parse_generators;
use grouprep::group::{normalize_label, DEFAULT_MAX_ORDER};
use grouprep::structure::{subgroup_from_members, Subgroup};
use grouprep::{Error, Group, QPolynomial};

use crate::CliError;

/// The group under analysis and whether it is the built-in fixture.
pub struct Input {
    pub group: Group,
    pub fixture: bool,
    pub source: String,
}

pub fn fixture(name: &str) -> Result<Input, CliError> {
    match name.to_ascii_lowercase().as_str() {
        "td" => Ok(Input {
            group: grouprep::fixture::td_group(),
            fixture: true,
            source: "fixture td".into(),
        }),
        other => Err(CliError::Input(format!("unknown fixture `{other}` (available: td)"))),
    }
}

pub fn generator_file(path: &Path) -> Result<Input, CliError> {
    let text = read(path)?;
    let file = parse_generators(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let group = file
        .to_group(DEFAULT_MAX_ORDER)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Input {
        group,
        fixture: false,
        source: path.display().to_string(),
    })
}

/// A Cayley table in the CSV layout written by `table --format csv`.
pub fn table_file(path: &Path) -> Result<Input, CliError> {
    let text = read(path)?;
    let group = group_from_csv(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Input {
        group,
        fixture: false,
        source: path.display().to_string(),
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn group_from_csv(text: &str) -> Result<Group, Error> {
    let bad = |msg: String| Error::Parse { pos: 0, msg };
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| bad(e.to_string()))?
        .iter()
        .skip(1)
        .map(str::to_string)
        .collect();
    let index = |label: &str| header.iter().position(|l| l == label);
    let mut rows = vec![None; header.len()];
    for record in reader.records() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let row_label = record.get(0).unwrap_or_default();
        let r = index(row_label).ok_or_else(|| Error::UnknownLabel(row_label.to_string()))?;
        let cells = record
            .iter()
            .skip(1)
            .map(|c| index(c).ok_or_else(|| Error::UnknownLabel(c.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        rows[r] = Some(cells);
    }
    let table = rows
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| bad("table is missing rows".into()))?;
    Group::from_table(table, header)
}

/// `E,Tx2,Ty2` -> sorted element indices, checked to form a subgroup.
pub fn subgroup_spec(group: &Group, spec: &str) -> Result<Subgroup, CliError> {
    let mut members = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|l| group.index_of(l))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Input(e.to_string()))?;
    members.sort_unstable();
    members.dedup();
    subgroup_from_members(group, &members).map_err(CliError::Analysis)
}

/// Irrep names compare after label normalisation, with a trailing `p`
/// standing for a prime.
pub fn same_irrep_name(a: &str, b: &str) -> bool {
    let norm = |s: &str| {
        let n = normalize_label(s).replace('\'', "p");
        n.to_ascii_lowercase()
    };
    norm(a) == norm(b)
}

pub fn polynomial(text: &str) -> Result<QPolynomial, CliError> {
    grouprep::parse::parse_polynomial(text).map_err(|e| CliError::Input(format!("seed: {e}")))
}
