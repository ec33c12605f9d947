//! Character tables by Dixon's method: simultaneous eigenvectors of the
//! class multiplication matrices over a prime field, lifted back to exact
//! values through eigenvalue multiplicities.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::Matrix;
use crate::repr::{character_of, Character, CharacterTable, Representation};
use crate::scalar::Scalar;
use crate::structure::{class_index, conjugacy_classes};
use crate::{QuadNumber, Rational};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Smallest prime `p = 1 (mod exponent)` with `p > 2 sqrt(order)`.
pub fn dixon_prime(exponent: usize, order: usize) -> u64 {
    let e = exponent as u64;
    let mut p = e + 1;
    loop {
        if p * p > 4 * order as u64 && is_prime(p) {
            return p;
        }
        p += e;
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Kernel of a `rows x cols` matrix over `F_p`.
fn kernel_mod(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(r) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, r);
        let inv = inv_mod(m[row][col], p);
        for x in m[row].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && line[col] != 0 {
                let f = line[col];
                for (x, y) in line.iter_mut().zip(&pivot).take(cols) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][free]) % p;
            }
            v
        })
        .collect()
}

/// Splits `space` (a list of basis vectors) into eigenspaces of `a`.
fn split(space: &[Vec<u64>], a: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let k = a.len();
    let d = space.len();
    let images: Vec<Vec<u64>> = space
        .iter()
        .map(|v| {
            (0..k)
                .map(|s| (0..k).fold(0, |acc, t| (acc + a[s][t] * v[t]) % p))
                .collect()
        })
        .collect();
    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        let m: Vec<Vec<u64>> = (0..k)
            .map(|s| {
                (0..d)
                    .map(|j| (images[j][s] + p - lambda * space[j][s] % p) % p)
                    .collect()
            })
            .collect();
        let ker = kernel_mod(m, d, p);
        if ker.is_empty() {
            continue;
        }
        found += ker.len();
        parts.push(
            ker.iter()
                .map(|c| {
                    (0..k)
                        .map(|s| (0..d).fold(0, |acc, j| (acc + c[j] * space[j][s]) % p))
                        .collect()
                })
                .collect(),
        );
        if found == d {
            return Ok(parts);
        }
    }
    Err(Error::CharacterTable(
        "class matrices are not diagonalisable modulo p".into(),
    ))
}

/// `Phi_n` with integer coefficients, lowest degree first.
fn cyclotomic(n: usize, cache: &mut HashMap<usize, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(c) = cache.get(&n) {
        return c.clone();
    }
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = -BigInt::one();
    num[n] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let div = cyclotomic(d, cache);
        num = div_monic(&num, &div);
    }
    cache.insert(n, num.clone());
    num
}

fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    q
}

/// Arithmetic in `Q[x] / Phi_N`, i.e. the cyclotomic field `Q(zeta_N)`.
struct CyclotomicField {
    n: usize,
    phi: Vec<BigInt>,
}

impl CyclotomicField {
    fn new(n: usize, cache: &mut HashMap<usize, Vec<BigInt>>) -> Self {
        CyclotomicField {
            n,
            phi: cyclotomic(n, cache),
        }
    }

    fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        for i in (d..v.len()).rev() {
            let c = std::mem::take(&mut v[i]);
            if c.is_zero() {
                continue;
            }
            for (j, pj) in self.phi.iter().enumerate().take(d) {
                v[i - d + j] -= &c * pj;
            }
        }
        v.resize(d, BigInt::zero());
        v
    }

    /// `zeta_N^k`.
    fn root(&self, k: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); k % self.n + 1];
        v[k % self.n] = BigInt::one();
        self.reduce(v)
    }

    fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        self.reduce(v)
    }

    /// Coordinates of `1, sqrt2, sqrt3, sqrt6` as columns.
    fn real_quadratic_basis(&self) -> Vec<Vec<BigInt>> {
        let n = self.n;
        let s2 = self.add(&self.root(n / 8), &self.root(7 * n / 8));
        let s3 = self.add(&self.root(n / 12), &self.root(11 * n / 12));
        let s6 = self.mul(&s2, &s3);
        vec![self.root(0), s2, s3, s6]
    }
}

/// `sum_j m_j zeta_order^j` as an element of `Q(sqrt2, sqrt3)`, if it lies
/// there.
fn lift_value(multiplicities: &[u64], order: usize, cache: &mut HashMap<usize, Vec<BigInt>>) -> Option<QuadNumber> {
    let n = order.lcm(&24);
    let field = CyclotomicField::new(n, cache);
    let mut value = vec![BigInt::zero(); field.degree()];
    for (j, &m) in multiplicities.iter().enumerate() {
        if m != 0 {
            let r = field.root(j * (n / order));
            value = field.add(&value, &r.iter().map(|x| x * BigInt::from(m)).collect::<Vec<_>>());
        }
    }
    let basis = field.real_quadratic_basis();
    let to_q = |v: &BigInt| Rational::from_integer(v.clone());
    let a = Matrix::from_fn(field.degree(), 4, |r, c| to_q(&basis[c][r]));
    let b: Vec<Rational> = value.iter().map(to_q).collect();
    let x = a.solve(&b)?;
    let [c1, c2, c3, c6]: [Rational; 4] = x.try_into().ok()?;
    Some(QuadNumber::new(c1, c2, c3, c6))
}

/// Complete character table. Rows are sorted by degree, then by values in
/// descending order; they are named `X1`, `X2`, ...
pub fn character_table<S: Scalar>(g: &Group<S>) -> Result<CharacterTable> {
    let n = g.order();
    let classes = conjugacy_classes(g);
    let k = classes.len();
    let class_of = class_index(&classes, n);
    if k == 1 {
        let row = Character {
            values: vec![QuadNumber::one()],
            rep_name: "X1".into(),
        };
        return Ok(CharacterTable::new(classes, vec![row], n));
    }
    let exponent = g.exponent();
    let p = dixon_prime(exponent, n);

    // a[r][s][t] = #{x in C_r : x^-1 z_t in C_s}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (t, ct) in classes.iter().enumerate() {
        let z = ct.representative;
        for (r, cr) in classes.iter().enumerate() {
            for &x in &cr.members {
                a[r][class_of[g.mul(g.inverse(x), z)]][t] += 1;
            }
        }
    }

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect()];
    for ar in a.iter().skip(1) {
        if spaces.len() == k {
            break;
        }
        let mut next = Vec::new();
        for space in &spaces {
            if space.len() == 1 {
                next.push(space.clone());
            } else {
                next.extend(split(
                    space,
                    &ar.iter().map(|r| r.iter().map(|x| x % p).collect()).collect::<Vec<_>>(),
                    p,
                )?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::CharacterTable("classes are not separated modulo p".into()));
    }

    let zeta_e = pow_mod(primitive_root(p), (p - 1) / exponent as u64, p);
    let inverse_class: Vec<usize> = classes.iter().map(|c| class_of[g.inverse(c.representative)]).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let mut cache = HashMap::new();
    let mut rows = Vec::with_capacity(k);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::CharacterTable("eigenvector vanishes at the identity".into()));
        }
        let scale = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * scale % p).collect();
        let s = (0..k).fold(0, |acc, t| {
            (acc + omega[t] * omega[inverse_class[t]] % p * inv_mod(sizes[t] % p, p)) % p
        });
        if s == 0 {
            return Err(Error::CharacterTable("degenerate norm modulo p".into()));
        }
        let target = (n as u64 % p) * inv_mod(s, p) % p;
        let degree = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % p == target)
            .ok_or_else(|| Error::CharacterTable("no degree fits modulo p".into()))?;
        let chi_mod: Vec<u64> = (0..k)
            .map(|t| omega[t] * degree % p * inv_mod(sizes[t] % p, p) % p)
            .collect();

        let mut values = Vec::with_capacity(k);
        for (t, ct) in classes.iter().enumerate() {
            let z = ct.representative;
            let order = g.element_order(z);
            let zeta = pow_mod(zeta_e, (exponent / order) as u64, p);
            let mut power_class = Vec::with_capacity(order);
            let mut y = g.identity();
            for _ in 0..order {
                power_class.push(class_of[y]);
                y = g.mul(y, z);
            }
            let inv_order = inv_mod(order as u64 % p, p);
            let mut mult = Vec::with_capacity(order);
            for j in 0..order {
                let zj_inv = inv_mod(pow_mod(zeta, j as u64, p), p);
                let sum = (0..order).fold(0, |acc, l| {
                    (acc + chi_mod[power_class[l]] * pow_mod(zj_inv, l as u64, p)) % p
                });
                let m = sum * inv_order % p;
                if m > degree {
                    return Err(Error::CharacterTable(format!("multiplicity out of range on class {t}")));
                }
                mult.push(m);
            }
            let value = lift_value(&mult, order, &mut cache).ok_or(Error::LiftFailure { class: t, order })?;
            values.push(value);
        }
        rows.push(Character {
            values,
            rep_name: String::new(),
        });
    }
    rows.sort_by(|x, y| x.values[0].cmp(&y.values[0]).then_with(|| y.values.cmp(&x.values)));
    for (i, row) in rows.iter_mut().enumerate() {
        row.rep_name = format!("X{}", i + 1);
    }
    let table = CharacterTable::new(classes, rows, n);
    if !table.rows_orthogonal() || !table.sum_of_squares_ok() {
        return Err(Error::CharacterTable("lifted characters fail orthogonality".into()));
    }
    Ok(table)
}

/// Renames rows after the representations whose characters they match.
pub fn name_rows_from(table: &mut CharacterTable, reps: &[Representation]) -> Result<()> {
    for rep in reps {
        let chi = character_of(rep, &table.classes)?;
        if let Some(row) = table.find_row(&chi.values) {
            table.rows[row].rep_name = rep.name().to_string();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::{td_group, td_irreps};
    use crate::group::{GroupElement, Permutation, DEFAULT_MAX_ORDER};
    use crate::iso::catalog;

    fn q(n: i64) -> QuadNumber {
        QuadNumber::from(n)
    }

    #[test]
    fn primes() {
        assert_eq!(dixon_prime(12, 24), 13);
        assert_eq!(dixon_prime(2, 4), 5);
        assert_eq!(dixon_prime(3, 3), 7);
    }

    #[test]
    fn cyclotomic_polynomials() {
        let mut cache = HashMap::new();
        let int = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic(1, &mut cache), int(&[-1, 1]));
        assert_eq!(cyclotomic(4, &mut cache), int(&[1, 0, 1]));
        assert_eq!(cyclotomic(12, &mut cache), int(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(24, &mut cache).len(), 9);
    }

    #[test]
    fn td_table() {
        let g = td_group();
        let mut t = character_table(&g).unwrap();
        assert_eq!(t.class_sizes(), vec![1, 3, 8, 6, 6]);
        let expected = [
            [1, 1, 1, 1, 1],
            [1, 1, 1, -1, -1],
            [2, 2, -1, 0, 0],
            [3, -1, 0, 1, -1],
            [3, -1, 0, -1, 1],
        ];
        for (row, want) in t.rows.iter().zip(expected) {
            assert_eq!(row.values, want.iter().map(|&x| q(x)).collect::<Vec<_>>());
        }
        name_rows_from(&mut t, &td_irreps()).unwrap();
        let names: Vec<&str> = t.rows.iter().map(|r| r.rep_name.as_str()).collect();
        assert_eq!(names, ["A", "B", "D3", "Td", "Td'"]);
        assert!(t.columns_orthogonal());
    }

    #[test]
    fn cyclic_three_needs_complex_roots() {
        let c3 = Group::<QuadNumber>::close_generators(
            &[GroupElement::Permutation(
                Permutation::from_cycles("(0 1 2)", 3).unwrap(),
            )],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        assert!(matches!(character_table(&c3), Err(Error::LiftFailure { order: 3, .. })));
    }

    #[test]
    fn trivial_group() {
        let g = &catalog()[0].group;
        let t = character_table(g).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].values, vec![q(1)]);
    }

    #[test]
    fn catalog_tables() {
        for entry in catalog() {
            match character_table(&entry.group) {
                Ok(t) => {
                    assert!(t.sum_of_squares_ok(), "{}", entry.name);
                    assert!(t.columns_orthogonal(), "{}", entry.name);
                }
                Err(Error::LiftFailure { .. }) => {}
                Err(e) => panic!("{}: {e}", entry.name),
            }
        }
        for name in ["C2xC2", "D4", "Q8", "D6", "S4", "C2xC2xC2"] {
            let g = &catalog().iter().find(|e| e.name == name).unwrap().group;
            assert!(character_table(g).is_ok(), "{name}");
        }
    }

    #[test]
    fn real_irrational_values() {
        // D8 acting on an octagon has characters with sqrt(2)
        let g = Group::<QuadNumber>::close_generators(
            &[
                GroupElement::Permutation(Permutation::from_cycles("(0 1 2 3 4 5 6 7)", 8).unwrap()),
                GroupElement::Permutation(Permutation::from_cycles("(1 7)(2 6)(3 5)", 8).unwrap()),
            ],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        let t = character_table(&g).unwrap();
        assert!(t.rows.iter().any(|r| r.values.contains(&QuadNumber::sqrt2())));
        assert!(t.rows_orthogonal());
    }
}
