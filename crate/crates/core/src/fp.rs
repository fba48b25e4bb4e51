//! Exact linear algebra over the prime field F_p: vectors, canonical
//! row-reduced subspaces, kernels, and subspace enumeration.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FpError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field mismatch: p={0} vs p={1}")]
    FieldMismatch(u32, u32),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// The field F_p. Construction checks primality by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FpError> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(FpError::NotPrime(p))
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        (a % self.p + self.p - b % self.p) % self.p
    }

    pub fn neg(&self, a: u32) -> u32 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse of a nonzero element, by Fermat's little theorem.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        base %= self.p;
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// A coordinate vector over F_p, entries reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VectorFp {
    p: u32,
    coords: Vec<u32>,
}

impl VectorFp {
    pub fn new(field: PrimeField, coords: Vec<u32>) -> Self {
        let p = field.p();
        VectorFp {
            p,
            coords: coords.into_iter().map(|c| c % p).collect(),
        }
    }

    pub fn zero(field: PrimeField, dim: usize) -> Self {
        VectorFp {
            p: field.p(),
            coords: vec![0; dim],
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &VectorFp) -> VectorFp {
        assert_eq!(self.p, other.p);
        assert_eq!(self.coords.len(), other.coords.len());
        VectorFp {
            p: self.p,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| (a + b) % self.p)
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> VectorFp {
        VectorFp {
            p: self.p,
            coords: self
                .coords
                .iter()
                .map(|&a| ((a as u64 * c as u64) % self.p as u64) as u32)
                .collect(),
        }
    }
}

/// A subspace of F_p^n held as a basis in reduced row-echelon form.
///
/// The RREF basis is canonical: two subspaces are equal iff their basis
/// matrices are identical, so `Eq`/`Hash`/`Ord` are structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubspaceFp {
    p: u32,
    ambient_dim: usize,
    basis: Vec<Vec<u32>>,
}

impl SubspaceFp {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        SubspaceFp {
            p: field.p(),
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        let mut basis = Vec::with_capacity(ambient_dim);
        for i in 0..ambient_dim {
            let mut row = vec![0u32; ambient_dim];
            row[i] = 1;
            basis.push(row);
        }
        SubspaceFp {
            p: field.p(),
            ambient_dim,
            basis,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduce `v` modulo this subspace: subtract basis multiples so every
    /// pivot coordinate becomes zero. The result is the canonical coset
    /// representative of `v`.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim);
        let f = self.field();
        let mut out: Vec<u32> = v.iter().map(|&c| c % self.p).collect();
        for row in &self.basis {
            let pivot = row.iter().position(|&c| c != 0).unwrap();
            let c = out[pivot];
            if c != 0 {
                for (o, &r) in out.iter_mut().zip(row) {
                    *o = f.sub(*o, f.mul(c, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    pub fn is_subspace_of(&self, other: &SubspaceFp) -> bool {
        self.p == other.p
            && self.ambient_dim == other.ambient_dim
            && self.basis.iter().all(|row| other.contains(row))
    }

    /// Columns without a pivot; these coordinatize the quotient F_p^n / self.
    pub fn non_pivot_columns(&self) -> Vec<usize> {
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|row| row.iter().position(|&c| c != 0).unwrap())
            .collect();
        (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .collect()
    }

    /// Coordinates of `v + self` in the quotient space, read off the
    /// non-pivot columns of the reduced representative.
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let red = self.reduce(v);
        self.non_pivot_columns().iter().map(|&c| red[c]).collect()
    }
}

/// Canonical row-reduced span of the given rows. Entries are reduced mod p.
pub fn rref(rows: &[Vec<u32>], field: PrimeField, ambient_dim: usize) -> SubspaceFp {
    let p = field.p();
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ambient_dim, "row length != ambient dimension");
            r.iter().map(|&c| c % p).collect()
        })
        .collect();
    let rank = row_reduce(&mut m, field, ambient_dim);
    m.truncate(rank);
    SubspaceFp {
        p,
        ambient_dim,
        basis: m,
    }
}

/// In-place reduced row echelon form on the first `lead_cols` columns.
/// Returns the rank. Rows may be longer than `lead_cols`; the tail columns
/// ride along (used by the kernel and intersection computations).
fn row_reduce(m: &mut [Vec<u32>], field: PrimeField, lead_cols: usize) -> usize {
    let rows = m.len();
    let mut r = 0usize;
    for col in 0..lead_cols {
        let Some(pivot_row) = (r..rows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, pivot_row);
        let inv = field.inv(m[r][col]);
        for c in m[r].iter_mut() {
            *c = field.mul(*c, inv);
        }
        for i in 0..rows {
            if i != r && m[i][col] != 0 {
                let factor = m[i][col];
                let (head, tail) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for (x, &y) in head.iter_mut().zip(tail.iter()) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Left kernel {x : x · matrix = 0} of an m-row matrix, acting on row
/// vectors by right multiplication.
pub fn kernel(matrix: &[Vec<u32>], field: PrimeField) -> SubspaceFp {
    let p = field.p();
    let m = matrix.len();
    let n = if m == 0 { 0 } else { matrix[0].len() };
    // Augment with the identity; rows whose matrix part vanishes record the
    // row combination that produced them.
    let mut aug: Vec<Vec<u32>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "ragged matrix");
            let mut r: Vec<u32> = row.iter().map(|&c| c % p).collect();
            r.extend(std::iter::repeat(0).take(m));
            r[n + i] = 1;
            r
        })
        .collect();
    let rank = row_reduce(&mut aug, field, n);
    let kernel_rows: Vec<Vec<u32>> = aug[rank..].iter().map(|r| r[n..].to_vec()).collect();
    rref(&kernel_rows, field, m)
}

/// Canonical span of the union of two subspaces.
pub fn subspace_sum(a: &SubspaceFp, b: &SubspaceFp) -> Result<SubspaceFp, FpError> {
    check_compatible(a, b)?;
    let mut rows = a.basis.clone();
    rows.extend(b.basis.iter().cloned());
    Ok(rref(&rows, a.field(), a.ambient_dim))
}

/// Canonical intersection, by the Zassenhaus block trick: reduce rows
/// [a|a] and [b|0]; rows with vanishing left half have right halves
/// spanning the intersection.
pub fn subspace_intersect(a: &SubspaceFp, b: &SubspaceFp) -> Result<SubspaceFp, FpError> {
    check_compatible(a, b)?;
    let n = a.ambient_dim;
    let field = a.field();
    let mut block: Vec<Vec<u32>> = Vec::with_capacity(a.dim() + b.dim());
    for row in &a.basis {
        let mut r = row.clone();
        r.extend(row.iter().cloned());
        block.push(r);
    }
    for row in &b.basis {
        let mut r = row.clone();
        r.extend(std::iter::repeat(0).take(n));
        block.push(r);
    }
    let rank = row_reduce(&mut block, field, n);
    let rows: Vec<Vec<u32>> = block[rank..].iter().map(|r| r[n..].to_vec()).collect();
    Ok(rref(&rows, field, n))
}

fn check_compatible(a: &SubspaceFp, b: &SubspaceFp) -> Result<(), FpError> {
    if a.p != b.p {
        return Err(FpError::FieldMismatch(a.p, b.p));
    }
    if a.ambient_dim != b.ambient_dim {
        return Err(FpError::DimensionMismatch(a.ambient_dim, b.ambient_dim));
    }
    Ok(())
}

/// All hyperplanes of F_p^n, exactly once, ordered lexicographically by
/// their normalized normal functional (first nonzero coordinate 1).
/// Count is 1 + p + ... + p^{n-1}; the empty list for n = 0.
pub fn enumerate_maximal_subspaces(ambient_dim: usize, field: PrimeField) -> Vec<SubspaceFp> {
    let p = field.p();
    let mut functionals: Vec<Vec<u32>> = Vec::new();
    for first in 0..ambient_dim {
        // Normalized: zeros before `first`, 1 at `first`, free tail.
        let tail = ambient_dim - first - 1;
        let mut counter = vec![0u32; tail];
        loop {
            let mut f = vec![0u32; ambient_dim];
            f[first] = 1;
            f[first + 1..].copy_from_slice(&counter);
            functionals.push(f);
            if !increment(&mut counter, p) {
                break;
            }
        }
    }
    functionals.sort();
    functionals
        .into_iter()
        .map(|f| {
            let column: Vec<Vec<u32>> = f.iter().map(|&c| vec![c]).collect();
            kernel(&column, field)
        })
        .collect()
}

/// Odometer increment over base-p digits; false once wrapped to all zeros.
fn increment(digits: &mut [u32], p: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// All subspaces S with `t` ⊆ S and dim S = ambient − codim, each exactly
/// once, in canonical (basis-lexicographic) order. Empty when the target
/// dimension is below dim t.
pub fn enumerate_subspaces_containing(t: &SubspaceFp, codim: usize) -> Vec<SubspaceFp> {
    let n = t.ambient_dim;
    if codim > n {
        return Vec::new();
    }
    let target = n - codim;
    if target < t.dim() {
        return Vec::new();
    }
    let field = t.field();
    let free_cols = t.non_pivot_columns();
    let qdim = free_cols.len();
    let want = target - t.dim();
    let mut out = Vec::new();
    for q in enumerate_subspaces_of_dim(qdim, want, field) {
        let mut rows = t.basis.clone();
        for qrow in q {
            let mut lifted = vec![0u32; n];
            for (qi, &col) in free_cols.iter().enumerate() {
                lifted[col] = qrow[qi];
            }
            rows.push(lifted);
        }
        out.push(rref(&rows, field, n));
    }
    out.sort();
    out.dedup();
    out
}

/// All k-dimensional subspaces of F_p^m as RREF bases, by enumerating
/// pivot-column sets and free entries.
fn enumerate_subspaces_of_dim(m: usize, k: usize, field: PrimeField) -> Vec<Vec<Vec<u32>>> {
    let p = field.p();
    if k > m {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for pivots in combinations(m, k) {
        // Free positions: row i may have nonzero entries in non-pivot
        // columns to the right of its own pivot.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            for col in pc + 1..m {
                if !pivots.contains(&col) {
                    free.push((i, col));
                }
            }
        }
        let mut counter = vec![0u32; free.len()];
        loop {
            let mut basis = vec![vec![0u32; m]; k];
            for (i, &pc) in pivots.iter().enumerate() {
                basis[i][pc] = 1;
            }
            for (slot, &(i, col)) in free.iter().enumerate() {
                basis[i][col] = counter[slot];
            }
            out.push(basis);
            if !increment(&mut counter, p) {
                break;
            }
        }
    }
    out
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..m {
            cur.push(c);
            go(c + 1, m, k, cur, out);
            cur.pop();
        }
    }
    go(0, m, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn primality_check() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(7).is_ok());
        assert_eq!(PrimeField::new(1), Err(FpError::NotPrime(1)));
        assert_eq!(PrimeField::new(6), Err(FpError::NotPrime(6)));
    }

    #[test]
    fn rref_normalizes_scalar_multiples() {
        let s = rref(&[vec![2, 4]], f(5), 2);
        assert_eq!(s.basis(), &[vec![1, 2]]);
    }

    #[test]
    fn rref_drops_duplicate_rows() {
        let s = rref(&[vec![1, 1], vec![1, 1]], f(2), 2);
        assert_eq!(s.basis(), &[vec![1, 1]]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn rref_dependent_rows_over_f2() {
        let s = rref(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]], f(2), 3);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn rref_idempotent() {
        let s = rref(&[vec![1, 2, 0], vec![2, 1, 1]], f(3), 3);
        let again = rref(s.basis(), f(3), 3);
        assert_eq!(s, again);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = kernel(&[vec![0], vec![0]], f(3));
        assert_eq!(k.dim(), 2);
        assert_eq!(k, SubspaceFp::full(f(3), 2));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let k = kernel(&id, f(2));
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn kernel_of_column_over_f5() {
        // x + 2y = 0 mod 5 has solution line spanned by (1, 2).
        let k = kernel(&[vec![1], vec![2]], f(5));
        assert_eq!(k.basis(), &[vec![1, 2]]);
    }

    #[test]
    fn sum_of_axes() {
        let e1 = rref(&[vec![1, 0, 0]], f(2), 3);
        let e2 = rref(&[vec![0, 1, 0]], f(2), 3);
        let s = subspace_sum(&e1, &e2).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(e1.is_subspace_of(&s) && e2.is_subspace_of(&s));
    }

    #[test]
    fn sum_is_idempotent() {
        let x = rref(&[vec![1, 2, 1]], f(3), 3);
        assert_eq!(subspace_sum(&x, &x).unwrap(), x);
    }

    #[test]
    fn sum_over_f3_contains_difference() {
        let a = rref(&[vec![1, 1, 0]], f(3), 3);
        let b = rref(&[vec![1, 0, 1]], f(3), 3);
        let s = subspace_sum(&a, &b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[0, 1, 2]));
    }

    #[test]
    fn intersect_distinct_lines_is_zero() {
        let a = rref(&[vec![1, 0]], f(2), 2);
        let b = rref(&[vec![0, 1]], f(2), 2);
        assert!(subspace_intersect(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn intersect_self_is_self() {
        let x = rref(&[vec![1, 0, 2], vec![0, 1, 1]], f(3), 3);
        assert_eq!(subspace_intersect(&x, &x).unwrap(), x);
    }

    #[test]
    fn intersect_planes_in_f3() {
        let a = rref(&[vec![1, 0, 0], vec![0, 1, 0]], f(3), 3);
        let b = rref(&[vec![0, 1, 0], vec![0, 0, 1]], f(3), 3);
        let e2 = rref(&[vec![0, 1, 0]], f(3), 3);
        assert_eq!(subspace_intersect(&a, &b).unwrap(), e2);
    }

    #[test]
    fn mismatched_operands_rejected() {
        let a = rref(&[vec![1, 0]], f(2), 2);
        let b = rref(&[vec![1, 0, 0]], f(2), 3);
        let c = rref(&[vec![1, 0]], f(3), 2);
        assert_eq!(
            subspace_sum(&a, &b),
            Err(FpError::DimensionMismatch(2, 3))
        );
        assert_eq!(subspace_intersect(&a, &c), Err(FpError::FieldMismatch(2, 3)));
    }

    #[test]
    fn hyperplane_counts() {
        assert_eq!(enumerate_maximal_subspaces(0, f(5)).len(), 0);
        let one = enumerate_maximal_subspaces(1, f(5));
        assert_eq!(one.len(), 1);
        assert!(one[0].is_zero());
        assert_eq!(enumerate_maximal_subspaces(3, f(2)).len(), 7);
        assert_eq!(enumerate_maximal_subspaces(2, f(3)).len(), 4);
    }

    #[test]
    fn hyperplanes_are_distinct_and_maximal() {
        let hs = enumerate_maximal_subspaces(3, f(3));
        assert_eq!(hs.len(), 13);
        for h in &hs {
            assert_eq!(h.dim(), 2);
        }
        let mut dedup = hs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), hs.len());
    }

    #[test]
    fn subspaces_containing_zero_in_f2_sq() {
        let z = SubspaceFp::zero(f(2), 2);
        let lines = enumerate_subspaces_containing(&z, 1);
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn subspaces_containing_line_in_f3_cubed() {
        let t = rref(&[vec![1, 0, 0]], f(3), 3);
        let planes = enumerate_subspaces_containing(&t, 1);
        assert_eq!(planes.len(), 4);
        for s in &planes {
            assert!(t.is_subspace_of(s));
            assert_eq!(s.dim(), 2);
        }
    }

    #[test]
    fn codim_below_t_dim_is_empty() {
        let t = rref(&[vec![1, 0], vec![0, 1]], f(2), 2);
        assert!(enumerate_subspaces_containing(&t, 1).is_empty());
    }

    #[test]
    fn codimension_one_above_corank_two_has_p_plus_one() {
        // t of dim d-2 inside dimension d: p + 1 intermediate hyperplanes.
        for p in [2u32, 3, 5] {
            let t = rref(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0]], f(p), 4);
            let mids = enumerate_subspaces_containing(&t, 1);
            assert_eq!(mids.len(), (p + 1) as usize);
        }
    }

    #[test]
    fn geometric_series_count_law() {
        for p in [2u32, 3, 5] {
            for e in 1..=4usize {
                let count = enumerate_maximal_subspaces(e, f(p)).len() as u64;
                let expected: u64 = (0..e as u32).map(|i| (p as u64).pow(i)).sum();
                assert_eq!(count, expected, "p={p} e={e}");
            }
        }
    }

    fn arb_subspace(p: u32, dim: usize) -> impl Strategy<Value = SubspaceFp> {
        prop::collection::vec(prop::collection::vec(0..p, dim), 0..=dim)
            .prop_map(move |rows| rref(&rows, f(p), dim))
    }

    proptest! {
        #[test]
        fn dimension_formula(p in prop::sample::select(vec![2u32, 3, 5]),
                             seed in any::<u64>()) {
            let dim = 4usize;
            let mut rng_rows = |s: u64| {
                let mut x = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                let mut rows = Vec::new();
                for _ in 0..3 {
                    let mut row = Vec::new();
                    for _ in 0..dim {
                        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        row.push(((x >> 33) % p as u64) as u32);
                    }
                    rows.push(row);
                }
                rref(&rows, f(p), dim)
            };
            let a = rng_rows(seed);
            let b = rng_rows(seed.wrapping_add(0x9e3779b97f4a7c15));
            let s = subspace_sum(&a, &b).unwrap();
            let i = subspace_intersect(&a, &b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
            prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
        }

        #[test]
        fn rank_nullity(p in prop::sample::select(vec![2u32, 3, 5]),
                        rows in prop::collection::vec(prop::collection::vec(0u32..5, 3), 0..5)) {
            let field = f(p);
            let k = kernel(&rows, field);
            let rank = rref(&rows, field, 3).dim();
            prop_assert_eq!(k.dim() + rank, rows.len());
        }

        #[test]
        fn rref_canonical_under_row_shuffle(p in prop::sample::select(vec![2u32, 3, 5])) {
            let rows = vec![vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 1]];
            let a = rref(&rows, f(p), 3);
            let shuffled = vec![rows[2].clone(), rows[0].clone(), rows[1].clone()];
            let b = rref(&shuffled, f(p), 3);
            prop_assert_eq!(a, b);
        }

        #[test]
        fn quotient_coords_vanish_exactly_on_members(s in arb_subspace(3, 4),
                                                     v in prop::collection::vec(0u32..3, 4)) {
            let q = s.quotient_coords(&v);
            prop_assert_eq!(q.iter().all(|&c| c == 0), s.contains(&v));
        }
    }
}
