//! Matrix representations, characters and character-based decomposition.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::structure::{class_index, ConjugacyClass};
use crate::QuadNumber;

/// Shared Cayley data identifying the group a representation lives on.
#[derive(Debug, PartialEq)]
struct GroupShape {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

/// One matrix per group element, indexed like the group.
#[derive(Clone, Debug)]
pub struct Representation<S = QuadNumber> {
    name: String,
    shape: Arc<GroupShape>,
    matrices: Vec<Matrix<S>>,
}

impl<S: Scalar> Representation<S> {
    /// Validated constructor: one square matrix of a common size per
    /// element, identity at the identity, and the homomorphism property on
    /// every pair.
    pub fn new<T: Scalar>(group: &Group<T>, name: &str, matrices: Vec<Matrix<S>>) -> Result<Self> {
        let rep = Self::new_unchecked(group, name, matrices)?;
        if !rep.is_homomorphism() {
            return Err(Error::NotHomomorphism(name.to_string()));
        }
        Ok(rep)
    }

    /// Shape checks only; callers vouch for the homomorphism property.
    pub fn new_unchecked<T: Scalar>(group: &Group<T>, name: &str, matrices: Vec<Matrix<S>>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                found: matrices.len(),
            });
        }
        let dim = matrices[0].nrows();
        if let Some(bad) = matrices.iter().find(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.ncols(),
            });
        }
        let shape = Arc::new(GroupShape {
            table: group.table().to_vec(),
            inverses: group.inverses().to_vec(),
        });
        Ok(Representation {
            name: name.to_string(),
            shape,
            matrices,
        })
    }

    fn with_shape(&self, name: String, matrices: Vec<Matrix<S>>) -> Self {
        Representation {
            name,
            shape: Arc::clone(&self.shape),
            matrices,
        }
    }

    /// Another representation of the same group, shape-checked only.
    pub fn sibling(&self, name: &str, matrices: Vec<Matrix<S>>) -> Result<Self> {
        if matrices.len() != self.group_order() {
            return Err(Error::DimensionMismatch {
                expected: self.group_order(),
                found: matrices.len(),
            });
        }
        let dim = matrices[0].nrows();
        if let Some(bad) = matrices.iter().find(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.ncols(),
            });
        }
        Ok(self.with_shape(name.to_string(), matrices))
    }

    pub fn trivial<T: Scalar>(group: &Group<T>) -> Self {
        let m = (0..group.order()).map(|_| Matrix::identity(1)).collect();
        Self::new_unchecked(group, "trivial", m).unwrap()
    }

    /// The representation given by the group's own elements (matrices, or
    /// permutation matrices).
    pub fn defining(group: &Group<S>) -> Self {
        let m = group.elements().iter().map(|e| e.to_matrix()).collect();
        Self::new_unchecked(group, "defining", m).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].nrows()
    }

    pub fn group_order(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrix(&self, i: usize) -> &Matrix<S> {
        &self.matrices[i]
    }

    pub fn matrices(&self) -> &[Matrix<S>] {
        &self.matrices
    }

    /// Index of the inverse element.
    pub fn inverse_index(&self, i: usize) -> usize {
        self.shape.inverses[i]
    }

    pub fn product_index(&self, i: usize, j: usize) -> usize {
        self.shape.table[i][j]
    }

    pub fn same_group(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.shape, &other.shape) || self.shape == other.shape
    }

    pub fn on_group<T: Scalar>(&self, group: &Group<T>) -> bool {
        self.shape.table == group.table()
    }

    /// `D(x) D(y) = D(xy)` for every pair and `D(e) = 1`.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.group_order();
        self.matrices[0].is_identity()
            && (0..n).all(|i| {
                (0..n).all(|j| self.matrices[i].mul(&self.matrices[j]) == self.matrices[self.shape.table[i][j]])
            })
    }

    /// Only the identity maps to the identity matrix.
    pub fn is_faithful(&self) -> bool {
        self.matrices.iter().skip(1).all(|m| !m.is_identity())
    }

    /// `D(R)^T D(R) = 1` for every element.
    pub fn is_orthogonal(&self) -> bool {
        self.matrices.iter().all(|m| m.transpose().mul(m).is_identity())
    }

    /// Kronecker product representation.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if !self.same_group(other) {
            return Err(Error::GroupMismatch);
        }
        let m = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.kron(b))
            .collect();
        Ok(self.with_shape(format!("{}x{}", self.name, other.name), m))
    }

    /// `C^-1 D(R) C` for every element.
    pub fn similar(&self, c: &Matrix<S>, name: &str) -> Result<Self> {
        let inv = c.inverse()?;
        let m = self.matrices.iter().map(|d| inv.mul(&d.mul(c))).collect();
        Ok(self.with_shape(name.to_string(), m))
    }

    /// Trace of every element's matrix.
    pub fn traces(&self) -> Vec<S> {
        self.matrices.iter().map(Matrix::trace).collect()
    }
}

/// Character values, one per conjugacy class.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub values: Vec<QuadNumber>,
    pub rep_name: String,
}

impl Character {
    /// Value on the identity class.
    pub fn degree(&self) -> usize {
        self.values[0]
            .to_integer()
            .and_then(|v| usize::try_from(v).ok())
            .unwrap_or(0)
    }
}

/// Trace per class, checked to be constant on each class.
pub fn character_of(rep: &Representation, classes: &[ConjugacyClass]) -> Result<Character> {
    let traces = rep.traces();
    let values = classes
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let v = &traces[c.representative];
            if c.members.iter().any(|&m| &traces[m] != v) {
                return Err(Error::TraceNotClassConstant(k));
            }
            Ok(v.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Character {
        values,
        rep_name: rep.name().to_string(),
    })
}

/// Complete irreducible character table.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Vec<ConjugacyClass>,
    pub rows: Vec<Character>,
    pub group_order: usize,
    class_of: Vec<usize>,
}

impl CharacterTable {
    pub fn new(classes: Vec<ConjugacyClass>, rows: Vec<Character>, group_order: usize) -> Self {
        let class_of = class_index(&classes, group_order);
        CharacterTable {
            classes,
            rows,
            group_order,
            class_of,
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(Character::degree).collect()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// `chi^row(element)`.
    pub fn value(&self, row: usize, element: usize) -> &QuadNumber {
        &self.rows[row].values[self.class_of[element]]
    }

    pub fn row_index(&self, name: &str) -> Result<usize> {
        self.rows
            .iter()
            .position(|r| r.rep_name == name)
            .ok_or_else(|| Error::UnknownIrrep(name.to_string()))
    }

    /// Row whose values equal `values`.
    pub fn find_row(&self, values: &[QuadNumber]) -> Option<usize> {
        self.rows.iter().position(|r| r.values == values)
    }

    pub fn rename_rows(&mut self, names: &[&str]) {
        for (row, name) in self.rows.iter_mut().zip(names) {
            row.rep_name = name.to_string();
        }
    }

    /// `(1/g) sum_a n(a) conj(chi^J_a) psi_a` for each row `J`.
    pub fn multiplicities(&self, values: &[QuadNumber]) -> Result<Vec<usize>> {
        let sizes = self.class_sizes();
        let g = QuadNumber::from(self.group_order as i64);
        self.rows
            .iter()
            .enumerate()
            .map(|(j, row)| {
                let mut acc = QuadNumber::zero();
                for ((chi, psi), &n) in row.values.iter().zip(values).zip(&sizes) {
                    acc += chi.conj() * psi * QuadNumber::from(n as i64);
                }
                let a = &acc / &g;
                a.to_integer()
                    .and_then(|v| usize::try_from(v).ok())
                    .ok_or(Error::NonIntegerMultiplicity(j))
            })
            .collect()
    }

    /// `sum_a n(a) chi^i_a conj(chi^j_a) = g delta_ij` for all row pairs.
    pub fn rows_orthogonal(&self) -> bool {
        let sizes = self.class_sizes();
        let g = QuadNumber::from(self.group_order as i64);
        (0..self.rows.len()).all(|i| {
            (0..self.rows.len()).all(|j| {
                let mut acc = QuadNumber::zero();
                for ((a, b), &n) in self.rows[i].values.iter().zip(&self.rows[j].values).zip(&sizes) {
                    acc += a * &b.conj() * QuadNumber::from(n as i64);
                }
                if i == j {
                    acc == g
                } else {
                    acc.is_zero()
                }
            })
        })
    }

    /// `sum_j conj(chi^j_a) chi^j_b = (g / n(a)) delta_ab`.
    pub fn columns_orthogonal(&self) -> bool {
        let k = self.classes.len();
        let sizes = self.class_sizes();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let mut acc = QuadNumber::zero();
                for row in &self.rows {
                    acc += row.values[a].conj() * &row.values[b];
                }
                if a == b {
                    acc == QuadNumber::from_ratio(self.group_order as i64, sizes[a] as i64)
                } else {
                    acc.is_zero()
                }
            })
        })
    }

    /// `sum_i m_i^2 = g`.
    pub fn sum_of_squares_ok(&self) -> bool {
        self.dims().iter().map(|d| d * d).sum::<usize>() == self.group_order
    }
}

/// Multiplicities `a_J` of each irrep in `rep`.
pub fn decompose(rep: &Representation, table: &CharacterTable) -> Result<Vec<usize>> {
    if rep.group_order() != table.group_order {
        return Err(Error::GroupMismatch);
    }
    let chi = character_of(rep, &table.classes)?;
    let a = table.multiplicities(&chi.values)?;
    let total: usize = a.iter().zip(table.dims()).map(|(a, d)| a * d).sum();
    if total != rep.dim() {
        return Err(Error::NonIntegerMultiplicity(0));
    }
    Ok(a)
}

/// Character values per element as a vector, for quick pointwise checks.
pub fn element_character(table: &CharacterTable, row: usize) -> Vec<QuadNumber> {
    (0..table.group_order).map(|x| table.value(row, x).clone()).collect()
}

/// `(m/g) sum_R conj(chi(R)) D(R)`, the projector onto the isotypic
/// component of `row`.
pub fn central_projector(rep: &Representation, table: &CharacterTable, row: usize) -> Matrix<QuadNumber> {
    let n = rep.dim();
    let mut acc = Matrix::zeros(n, n);
    for (x, m) in rep.matrices().iter().enumerate() {
        let c = table.value(row, x).conj();
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&m.scale(&c));
    }
    let dim = table.rows[row].degree() as i64;
    acc.scale(&QuadNumber::from_ratio(dim, table.group_order as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::{td_group, td_irreps};
    use crate::structure::conjugacy_classes;

    fn q(n: i64) -> QuadNumber {
        QuadNumber::from(n)
    }

    #[test]
    fn fixture_characters() {
        let g = td_group();
        let classes = conjugacy_classes(&g);
        let irreps = td_irreps();
        let chars: Vec<Vec<QuadNumber>> = irreps
            .iter()
            .map(|r| character_of(r, &classes).unwrap().values)
            .collect();
        // class order is E, 3T, 8R, 6 mirrors, 6 rotoreflections
        assert_eq!(chars[3], vec![q(3), q(-1), q(0), q(1), q(-1)]);
        assert_eq!(chars[0], vec![q(1); 5]);
        assert_eq!(chars[2], vec![q(2), q(2), q(-1), q(0), q(0)]);
    }

    #[test]
    fn tensor_products() {
        let g = td_group();
        let classes = conjugacy_classes(&g);
        let irreps = td_irreps();
        let bt = irreps[1].tensor(&irreps[3]).unwrap();
        assert!(bt.is_homomorphism());
        assert_eq!(
            character_of(&bt, &classes).unwrap().values,
            vec![q(3), q(-1), q(0), q(-1), q(1)]
        );
        let at = irreps[0].tensor(&irreps[4]).unwrap();
        assert_eq!(
            character_of(&at, &classes).unwrap().values,
            character_of(&irreps[4], &classes).unwrap().values
        );
        let dd = irreps[2].tensor(&irreps[2]).unwrap();
        assert_eq!(dd.dim(), 4);
        assert_eq!(
            character_of(&dd, &classes).unwrap().values,
            vec![q(4), q(4), q(1), q(0), q(0)]
        );
    }

    #[test]
    fn non_representation_is_rejected() {
        let g = td_group();
        let mut mats: Vec<Matrix<QuadNumber>> = (0..24).map(|_| Matrix::identity(1)).collect();
        mats[5] = Matrix::from_ints(&[&[-1]]);
        assert!(matches!(
            Representation::new(&g, "bad", mats.clone()),
            Err(Error::NotHomomorphism(_))
        ));
        let rep = Representation::new_unchecked(&g, "bad", mats).unwrap();
        let classes = conjugacy_classes(&g);
        assert_eq!(character_of(&rep, &classes), Err(Error::TraceNotClassConstant(2)));
    }

    #[test]
    fn group_mismatch() {
        let g = td_group();
        let other = crate::iso::catalog().iter().find(|e| e.name == "S4").unwrap();
        let a = Representation::<QuadNumber>::trivial(&g);
        let b = Representation::<QuadNumber>::trivial(&other.group);
        assert_eq!(a.tensor(&b).unwrap_err(), Error::GroupMismatch);
    }
}
