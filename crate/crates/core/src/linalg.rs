//! Exact dense linear algebra over cyclotomic scalars.
//!
//! Matrices are row-major with all entries lifted to one common conductor at
//! construction time. Elimination is fraction-free (Bareiss) with the pivot
//! chosen as the first nonzero entry in column order; there is no magnitude
//! comparison in an exact field, and the fixed pivot rule keeps every result
//! deterministic. Nullspace bases are echelon-normalized (first nonzero
//! coordinate equal to one) so they are canonical and comparable in tests.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{lcm_u32, CycError, CycNum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    /// Inner dimensions do not match for a product.
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    /// Operation requires a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Inverse of a singular matrix.
    Singular,
    Cyc(CycError),
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {}x{} times {}x{}", left.0, left.1, right.0, right.1)
            }
            LinAlgError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            LinAlgError::Singular => write!(f, "matrix is singular"),
            LinAlgError::Cyc(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LinAlgError {}

impl From<CycError> for LinAlgError {
    fn from(e: CycError) -> Self {
        LinAlgError::Cyc(e)
    }
}

/// Dense matrix over [`CycNum`] with a shared conductor across entries.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    entries: Vec<CycNum>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} (N={}) [", self.rows, self.cols, self.conductor)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    /// Build from row-major entries, lifting everything to a common conductor.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<CycNum>) -> ExactMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        let mut n = 1u32;
        for e in &entries {
            n = lcm_u32(n, e.conductor());
        }
        let entries = entries
            .into_iter()
            .map(|e| e.lift_to(n).expect("lcm is a multiple"))
            .collect();
        ExactMatrix { rows, cols, conductor: n, entries }
    }

    pub fn from_rows(rows_vec: Vec<Vec<CycNum>>) -> ExactMatrix {
        let rows = rows_vec.len();
        let cols = rows_vec.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows_vec.iter().all(|r| r.len() == cols), "ragged rows");
        ExactMatrix::from_entries(rows, cols, rows_vec.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut entries = vec![CycNum::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = CycNum::one();
        }
        ExactMatrix { rows: n, cols: n, conductor: 1, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix { rows, cols, conductor: 1, entries: vec![CycNum::zero(); rows * cols] }
    }

    pub fn diagonal(diag: Vec<CycNum>) -> ExactMatrix {
        let n = diag.len();
        let mut m = ExactMatrix::zero(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.cols + j]
    }

    /// Replace one entry, re-lifting so all entries stay at one conductor.
    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        let n = lcm_u32(self.conductor, v.conductor());
        if n != self.conductor {
            for e in self.entries.iter_mut() {
                *e = e.lift_to(n).expect("lcm is a multiple");
            }
            self.conductor = n;
        }
        self.entries[i * self.cols + j] = v.lift_to(n).expect("lcm is a multiple");
    }

    pub fn lift_to(&self, n: u32) -> Result<ExactMatrix, CycError> {
        if n == self.conductor {
            return Ok(self.clone());
        }
        let entries: Result<Vec<CycNum>, CycError> =
            self.entries.iter().map(|e| e.lift_to(n)).collect();
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, conductor: n, entries: entries? })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self.at(i, j).is_one() } else { self.at(i, j).is_zero() }
                })
            })
    }

    /// Scalar multiple of the identity?
    pub fn as_scalar(&self) -> Option<&CycNum> {
        if !self.is_square() {
            return None;
        }
        let d = self.at(0, 0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i == j {
                    if self.at(i, j) != d {
                        return None;
                    }
                } else if !self.at(i, j).is_zero() {
                    return None;
                }
            }
        }
        Some(d)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.at(i, j).clone());
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, conductor: self.conductor, entries }
    }

    pub fn scale(&self, s: &CycNum) -> ExactMatrix {
        ExactMatrix::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e.mul(s)).collect(),
        )
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(ExactMatrix::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().zip(other.entries.iter()).map(|(a, b)| a.add(b)).collect(),
        ))
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(ExactMatrix::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().zip(other.entries.iter()).map(|(a, b)| a.sub(b)).collect(),
        ))
    }

    /// Exact matrix product.
    pub fn mat_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let n = lcm_u32(self.conductor, other.conductor);
        let a = self.lift_to(n)?;
        let b = other.lift_to(n)?;
        let zero = CycNum::zero().lift_to(n)?;
        let mut entries = Vec::with_capacity(a.rows * b.cols);
        for i in 0..a.rows {
            for j in 0..b.cols {
                let mut acc = zero.clone();
                for k in 0..a.cols {
                    let x = a.at(i, k);
                    if x.is_zero() {
                        continue;
                    }
                    let y = b.at(k, j);
                    if y.is_zero() {
                        continue;
                    }
                    acc = acc.add(&x.mul(y));
                }
                entries.push(acc);
            }
        }
        Ok(ExactMatrix { rows: a.rows, cols: b.cols, conductor: n, entries })
    }

    /// Kronecker product; satisfies (A (x) B)(C (x) D) = AC (x) BD.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = vec![CycNum::zero(); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        entries[(i * other.rows + k) * cols + (j * other.cols + l)] = a.mul(b);
                    }
                }
            }
        }
        ExactMatrix::from_entries(rows, cols, entries)
    }

    /// Block-diagonal assembly of square blocks.
    pub fn direct_sum(blocks: &[ExactMatrix]) -> ExactMatrix {
        assert!(!blocks.is_empty(), "need at least one block");
        assert!(blocks.iter().all(|b| b.is_square()), "blocks must be square");
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = ExactMatrix::zero(n, n);
        let mut off = 0usize;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    if !b.at(i, j).is_zero() {
                        m.set(off + i, off + j, b.at(i, j).clone());
                    }
                }
            }
            off += b.rows;
        }
        m
    }

    pub fn trace(&self) -> CycNum {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut t = CycNum::zero();
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        t
    }

    /// Exact determinant: closed form up to 3x3, fraction-free Bareiss
    /// elimination beyond.
    pub fn det(&self) -> Result<CycNum, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let m = self.rows;
        match m {
            1 => Ok(self.at(0, 0).clone()),
            2 => Ok(self.at(0, 0).mul(self.at(1, 1)).sub(&self.at(0, 1).mul(self.at(1, 0)))),
            3 => {
                let a = |i: usize, j: usize| self.at(i, j);
                let mut acc = a(0, 0).mul(&a(1, 1).mul(a(2, 2)).sub(&a(1, 2).mul(a(2, 1))));
                acc = acc.sub(&a(0, 1).mul(&a(1, 0).mul(a(2, 2)).sub(&a(1, 2).mul(a(2, 0)))));
                acc = acc.add(&a(0, 2).mul(&a(1, 0).mul(a(2, 1)).sub(&a(1, 1).mul(a(2, 0)))));
                Ok(acc)
            }
            _ => Ok(self.bareiss_det()),
        }
    }

    fn bareiss_det(&self) -> CycNum {
        let n = self.rows;
        let mut m: Vec<Vec<CycNum>> =
            (0..n).map(|i| (0..n).map(|j| self.at(i, j).clone()).collect()).collect();
        let mut sign_flip = false;
        let mut prev = CycNum::one();
        for k in 0..n - 1 {
            // first nonzero pivot in column order
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return CycNum::zero();
            };
            if p != k {
                m.swap(p, k);
                sign_flip = !sign_flip;
            }
            let prev_inv = prev.inverse().expect("previous pivot is nonzero");
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num.mul(&prev_inv);
                }
                m[i][k] = CycNum::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }

    /// Reduced row echelon form together with the pivot column list.
    pub(crate) fn rref(&self) -> (Vec<Vec<CycNum>>, Vec<usize>) {
        let mut m: Vec<Vec<CycNum>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inverse().expect("pivot nonzero");
            for j in c..self.cols {
                if !m[r][j].is_zero() {
                    m[r][j] = m[r][j].mul(&inv);
                }
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.cols {
                        if !m[r][j].is_zero() {
                            m[i][j] = m[i][j].sub(&f.mul(&m[r][j]));
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the kernel as column vectors, echelon-normalized so the
    /// first nonzero coordinate of each basis vector is one. Empty iff the
    /// matrix is injective.
    pub fn nullspace(&self) -> Vec<ExactMatrix> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fcol in &free {
            let mut v = vec![CycNum::zero(); self.cols];
            v[fcol] = CycNum::one();
            for (r, &pcol) in pivots.iter().enumerate() {
                if !m[r][fcol].is_zero() {
                    v[pcol] = m[r][fcol].neg();
                }
            }
            // normalize first nonzero coordinate to 1
            let lead = v.iter().position(|x| !x.is_zero()).expect("basis vector nonzero");
            if !v[lead].is_one() {
                let inv = v[lead].inverse().expect("leading coefficient nonzero");
                v = v.into_iter().map(|x| if x.is_zero() { x } else { x.mul(&inv) }).collect();
            }
            basis.push(ExactMatrix::from_entries(self.cols, 1, v));
        }
        basis
    }

    /// Exact inverse via Gauss-Jordan on the augmented matrix.
    pub fn inverse(&self) -> Result<ExactMatrix, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, CycNum::one());
        }
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinAlgError::Singular);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(m[i][n + j].clone());
            }
        }
        Ok(ExactMatrix::from_entries(n, n, entries))
    }

    /// Deterministic canonical key for exact dedup; entries must already
    /// share the conductor with any matrix it is compared against.
    pub(crate) fn dedup_key(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        let _ = write!(s, "{}x{}@{}:", self.rows, self.cols, self.conductor);
        for e in &self.entries {
            for c in e.coeffs() {
                let _ = write!(s, "{}/{};", c.numer(), c.denom());
            }
            s.push('|');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::BigRational;
    use num_bigint::BigInt;

    fn c(v: i64) -> CycNum {
        CycNum::from_integer(v)
    }

    fn m2(a: i64, b: i64, cc: i64, d: i64) -> ExactMatrix {
        ExactMatrix::from_entries(2, 2, vec![c(a), c(b), c(cc), c(d)])
    }

    #[test]
    fn identity_multiplication() {
        let b = m2(3, 1, -2, 5);
        assert_eq!(ExactMatrix::identity(2).mat_mul(&b).unwrap(), b);
        assert_eq!(b.mat_mul(&ExactMatrix::identity(2)).unwrap(), b);
    }

    #[test]
    fn diagonal_products() {
        let a = ExactMatrix::diagonal(vec![c(2), c(3)]);
        let b = ExactMatrix::diagonal(vec![c(5), c(7)]);
        assert_eq!(a.mat_mul(&b).unwrap(), ExactMatrix::diagonal(vec![c(10), c(21)]));
    }

    #[test]
    fn quaternion_j_relation() {
        let j = m2(0, 1, -1, 0);
        let sq = j.mat_mul(&j).unwrap();
        assert_eq!(sq, ExactMatrix::identity(2).scale(&c(-1)));
    }

    #[test]
    fn dimension_mismatch_detected() {
        let a = ExactMatrix::zero(2, 3);
        let b = ExactMatrix::zero(2, 3);
        assert!(matches!(a.mat_mul(&b), Err(LinAlgError::DimensionMismatch { .. })));
    }

    #[test]
    fn kron_basics() {
        let i2 = ExactMatrix::identity(2);
        assert_eq!(i2.kron(&i2), ExactMatrix::identity(4));
        let a = ExactMatrix::diagonal(vec![c(2), c(3)]);
        let b = ExactMatrix::diagonal(vec![c(5), c(7)]);
        assert_eq!(a.kron(&b), ExactMatrix::diagonal(vec![c(10), c(14), c(15), c(21)]));
        // ([[0,1],[1,0]] (x) I)^2 = I, checked by direct multiplication
        let swap = m2(0, 1, 1, 0).kron(&i2);
        assert_eq!(swap.mat_mul(&swap).unwrap(), ExactMatrix::identity(4));
    }

    #[test]
    fn kron_mixed_product() {
        let a = m2(1, 2, 0, 1);
        let b = m2(3, 0, 1, 1);
        let cc = m2(0, 1, -1, 2);
        let d = m2(2, 1, 1, 0);
        let lhs = a.kron(&b).mat_mul(&cc.kron(&d)).unwrap();
        let rhs = a.mat_mul(&cc).unwrap().kron(&b.mat_mul(&d).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nullspace_cases() {
        assert!(ExactMatrix::identity(3).nullspace().is_empty());
        assert_eq!(ExactMatrix::zero(2, 2).nullspace().len(), 2);
        let ones = m2(1, 1, 1, 1);
        let ns = ones.nullspace();
        assert_eq!(ns.len(), 1);
        // hand elimination gives (1, -1) after leading-1 normalization
        assert_eq!(ns[0], ExactMatrix::from_entries(2, 1, vec![c(1), c(-1)]));
    }

    #[test]
    fn rank_nullity_on_samples() {
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 5) as i64 - 2
        };
        for rows in [2usize, 3, 4] {
            for cols in [2usize, 3, 5] {
                let entries: Vec<CycNum> = (0..rows * cols).map(|_| c(next())).collect();
                let m = ExactMatrix::from_entries(rows, cols, entries);
                assert_eq!(m.rank() + m.nullspace().len(), cols);
                // kernel vectors actually die
                for v in m.nullspace() {
                    assert!(m.mat_mul(&v).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn det_closed_forms() {
        assert!(ExactMatrix::identity(5).det().unwrap().is_one());
        let g = m2(3, 4, 5, 7);
        assert_eq!(g.det().unwrap(), c(1));
        let z = CycNum::root_of_unity(8, 1);
        let d = ExactMatrix::diagonal(vec![z.clone(), z.conj()]);
        assert!(d.det().unwrap().is_one());
        assert!(ExactMatrix::zero(4, 4).det().unwrap().is_zero());
    }

    #[test]
    fn det_multiplicative_and_matches_bareiss() {
        let mut seed = 777u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for n in [2usize, 3, 4, 5] {
            let a = ExactMatrix::from_entries(n, n, (0..n * n).map(|_| c(next())).collect());
            let b = ExactMatrix::from_entries(n, n, (0..n * n).map(|_| c(next())).collect());
            let lhs = a.mat_mul(&b).unwrap().det().unwrap();
            let rhs = a.det().unwrap().mul(&b.det().unwrap());
            assert_eq!(lhs, rhs, "det multiplicativity at n={n}");
            // closed forms agree with fraction-free elimination
            assert_eq!(a.det().unwrap(), a.bareiss_det(), "bareiss agreement at n={n}");
        }
    }

    #[test]
    fn matmul_associativity_and_inverse() {
        let mut seed = 999u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for n in [2usize, 3, 4] {
            let a = ExactMatrix::from_entries(n, n, (0..n * n).map(|_| c(next())).collect());
            let b = ExactMatrix::from_entries(n, n, (0..n * n).map(|_| c(next())).collect());
            let d = ExactMatrix::from_entries(n, n, (0..n * n).map(|_| c(next())).collect());
            assert_eq!(
                a.mat_mul(&b).unwrap().mat_mul(&d).unwrap(),
                a.mat_mul(&b.mat_mul(&d).unwrap()).unwrap()
            );
            if !a.det().unwrap().is_zero() {
                let inv = a.inverse().unwrap();
                assert!(a.mat_mul(&inv).unwrap().is_identity());
                assert!(inv.mat_mul(&a).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn direct_sum_assembly() {
        let a = ExactMatrix::identity(1);
        let b = ExactMatrix::identity(2);
        assert_eq!(ExactMatrix::direct_sum(&[a, b]), ExactMatrix::identity(3));
        let d1 = ExactMatrix::diagonal(vec![c(2)]);
        let d2 = ExactMatrix::diagonal(vec![c(3), c(5)]);
        assert_eq!(
            ExactMatrix::direct_sum(&[d1, d2]),
            ExactMatrix::diagonal(vec![c(2), c(3), c(5)])
        );
        let b1 = m2(1, 2, 3, 4);
        let b2 = m2(5, 6, 7, 8);
        let s = ExactMatrix::direct_sum(&[b1.clone(), b2.clone()]);
        assert_eq!(s.rows(), 4);
        assert!(s.at(0, 2).is_zero() && s.at(3, 1).is_zero());
        assert_eq!(s.at(0, 1), b1.at(0, 1));
        assert_eq!(s.at(2, 3), b2.at(0, 1));
    }

    #[test]
    fn nullspace_over_cyclotomic_entries() {
        // rows proportional over Q(zeta_8): second row = zeta_8 * first row
        let z = CycNum::root_of_unity(8, 1);
        let row1 = vec![CycNum::one(), z.clone()];
        let row2 = vec![z.clone(), z.mul(&z)];
        let m = ExactMatrix::from_rows(vec![row1, row2]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(ns[0].at(0, 0).is_one()); // echelon normalization
        assert!(m.mat_mul(&ns[0]).unwrap().is_zero());
    }

    #[test]
    fn rational_entry_matrix_inverse() {
        let h = BigRational::new(BigInt::from(1), BigInt::from(2));
        let e = CycNum::from_rational(h);
        let m = ExactMatrix::from_entries(2, 2, vec![e.clone(), c(0), c(1), e]);
        let inv = m.inverse().unwrap();
        assert!(m.mat_mul(&inv).unwrap().is_identity());
    }
}
