//! Representations of finite matrix groups and the functor calculus:
//! symmetric powers, tensor products, duals, twists, determinant characters,
//! induction from index-2 subgroups, characters and intertwiner spaces.
//!
//! A representation stores one image matrix per group element (all at one
//! common conductor), which makes characters, restriction and full
//! homomorphism validation loop-free. Isomorphism of representations is
//! decided by character equality: characters are complete invariants for
//! semisimple representations of a finite group in characteristic zero, and
//! isomorphism here always means isomorphism as representations of the
//! finite group.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{lcm_u32, CycError, CycNum};
use crate::group::{LinearCharacter, MatrixGroup, SubgroupHandle};
use crate::linalg::{ExactMatrix, LinAlgError};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    /// The two representations live on different groups.
    GroupMismatch,
    /// Symmetric powers are implemented for degree-2 inputs only.
    DegreeNotTwo { degree: usize },
    /// Induction needs an index-2 subgroup with a coset representative.
    NotIndexTwo { index: usize },
    /// A character lives on a different group than the representation.
    CharacterGroupMismatch,
    Cyc(CycError),
    LinAlg(LinAlgError),
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::GroupMismatch => write!(f, "representations live on different groups"),
            RepError::DegreeNotTwo { degree } => {
                write!(f, "operation needs a degree-2 representation, got degree {degree}")
            }
            RepError::NotIndexTwo { index } => {
                write!(f, "induction needs an index-2 subgroup, got index {index}")
            }
            RepError::CharacterGroupMismatch => {
                write!(f, "character lives on a different group")
            }
            RepError::Cyc(e) => write!(f, "{e}"),
            RepError::LinAlg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RepError {}

impl From<CycError> for RepError {
    fn from(e: CycError) -> Self {
        RepError::Cyc(e)
    }
}

impl From<LinAlgError> for RepError {
    fn from(e: LinAlgError) -> Self {
        RepError::LinAlg(e)
    }
}

/// The action of a 2x2 matrix on degree-n homogeneous polynomials in x, y.
///
/// For g = [[a, b], [c, d]] the result is the (n+1) x (n+1) matrix on the
/// monomial basis x^(n-k) y^k ordered k = 0..n, whose column k holds the
/// coefficients of (a x + c y)^(n-k) (b x + d y)^k. In particular column 0
/// of the cube is (a^3, 3a^2 c, 3a c^2, c^3) and diagonal g maps to
/// diag(a^n, a^(n-1) d, ..., d^n).
pub fn sym_matrix(g: &ExactMatrix, n: usize) -> ExactMatrix {
    assert_eq!((g.rows(), g.cols()), (2, 2), "symmetric powers act on 2x2 matrices");
    if n == 0 {
        return ExactMatrix::identity(1);
    }
    let a = g.at(0, 0);
    let b = g.at(0, 1);
    let c = g.at(1, 0);
    let d = g.at(1, 1);
    // powers of the two column linear forms, as coefficient vectors in y-degree
    let pow = |x0: &CycNum, y0: &CycNum| -> Vec<Vec<CycNum>> {
        let mut out: Vec<Vec<CycNum>> = Vec::with_capacity(n + 1);
        out.push(vec![CycNum::one()]);
        for j in 1..=n {
            let prev = &out[j - 1];
            let mut next = vec![CycNum::zero(); j + 1];
            for (t, coeff) in prev.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                if !x0.is_zero() {
                    next[t] = next[t].add(&coeff.mul(x0));
                }
                if !y0.is_zero() {
                    next[t + 1] = next[t + 1].add(&coeff.mul(y0));
                }
            }
            out.push(next);
        }
        out
    };
    let left = pow(a, c); // (a x + c y)^j
    let right = pow(b, d); // (b x + d y)^k
    let mut m = ExactMatrix::zero(n + 1, n + 1);
    for k in 0..=n {
        let lf = &left[n - k];
        let rf = &right[k];
        for (t1, c1) in lf.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (t2, c2) in rf.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                let row = t1 + t2;
                let cur = m.at(row, k).add(&c1.mul(c2));
                m.set(row, k, cur);
            }
        }
    }
    m
}

/// A homomorphism from a finite matrix group into GL_m, stored as one exact
/// matrix per group element (element 0 maps to the identity).
#[derive(Clone)]
pub struct Representation {
    group: Arc<MatrixGroup>,
    degree: usize,
    images: Vec<ExactMatrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation(degree={}, |G|={})", self.degree, self.group.order())
    }
}

impl Representation {
    /// Wrap explicit images; lifts everything to one common conductor and
    /// checks that the identity maps to the identity.
    pub fn new(group: Arc<MatrixGroup>, images: Vec<ExactMatrix>) -> Representation {
        assert_eq!(images.len(), group.order(), "one image per group element");
        let degree = images[0].rows();
        assert!(images.iter().all(|m| m.rows() == degree && m.cols() == degree));
        assert!(images[0].is_identity(), "identity must map to the identity");
        let mut n = 1u32;
        for m in &images {
            n = lcm_u32(n, m.conductor());
        }
        let images = images
            .into_iter()
            .map(|m| m.lift_to(n).expect("lcm is a multiple"))
            .collect();
        Representation { group, degree, images }
    }

    /// The defining representation: each element maps to itself.
    pub fn defining(group: &Arc<MatrixGroup>) -> Representation {
        Representation::new(Arc::clone(group), group.elements().to_vec())
    }

    pub fn trivial(group: &Arc<MatrixGroup>) -> Representation {
        Representation::new(Arc::clone(group), vec![ExactMatrix::identity(1); group.order()])
    }

    /// A linear character as a 1-dimensional representation.
    pub fn from_character(chi: &LinearCharacter) -> Representation {
        let images = chi
            .values()
            .iter()
            .map(|v| ExactMatrix::from_entries(1, 1, vec![v.clone()]))
            .collect();
        Representation::new(Arc::clone(chi.group()), images)
    }

    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, i: usize) -> &ExactMatrix {
        &self.images[i]
    }

    pub fn images(&self) -> &[ExactMatrix] {
        &self.images
    }

    pub fn conductor(&self) -> u32 {
        self.images[0].conductor()
    }

    /// Check the homomorphism property on at most `max_pairs` products (all
    /// pairs when the full table fits the budget, a fixed pseudo-random
    /// sample otherwise).
    pub fn validate_homomorphism(&self, max_pairs: usize) -> bool {
        if !self.images[0].is_identity() {
            return false;
        }
        let n = self.group.order();
        let check = |a: usize, b: usize| -> bool {
            let lhs = self.images[a].mat_mul(&self.images[b]).expect("square images");
            lhs == self.images[self.group.mul(a, b)]
        };
        if n * n <= max_pairs {
            (0..n).all(|a| (0..n).all(|b| check(a, b)))
        } else {
            let mut state = 0x243f6a8885a308d3u64;
            (0..max_pairs).all(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (state >> 33) as usize % n;
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let b = (state >> 33) as usize % n;
                check(a, b)
            })
        }
    }

    /// The n-th symmetric power; requires degree 2.
    pub fn sym_power(&self, n: usize) -> Result<Representation, RepError> {
        if self.degree != 2 {
            return Err(RepError::DegreeNotTwo { degree: self.degree });
        }
        let images = self.images.iter().map(|g| sym_matrix(g, n)).collect();
        Ok(Representation::new(Arc::clone(&self.group), images))
    }

    /// Elementwise Kronecker product of two representations of one group.
    pub fn tensor(&self, other: &Representation) -> Result<Representation, RepError> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        let images = self
            .images
            .iter()
            .zip(other.images.iter())
            .map(|(a, b)| a.kron(b))
            .collect();
        Ok(Representation::new(Arc::clone(&self.group), images))
    }

    /// Blockwise direct sum.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        let images = self
            .images
            .iter()
            .zip(other.images.iter())
            .map(|(a, b)| ExactMatrix::direct_sum(&[a.clone(), b.clone()]))
            .collect();
        Ok(Representation::new(Arc::clone(&self.group), images))
    }

    /// Contragredient: g maps to the transpose of the image of g^-1.
    pub fn dual(&self) -> Representation {
        let images = (0..self.group.order())
            .map(|i| self.images[self.group.inv(i)].transpose())
            .collect();
        Representation::new(Arc::clone(&self.group), images)
    }

    /// Twist by a linear character: g maps to chi(g) * rho(g).
    pub fn twist(&self, chi: &LinearCharacter) -> Result<Representation, RepError> {
        if !Arc::ptr_eq(&self.group, chi.group()) {
            return Err(RepError::CharacterGroupMismatch);
        }
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(i, m)| m.scale(chi.value(i)))
            .collect();
        Ok(Representation::new(Arc::clone(&self.group), images))
    }

    /// The determinant character g -> det(rho(g)).
    pub fn det_character(&self) -> LinearCharacter {
        let values: Vec<CycNum> = self
            .images
            .iter()
            .map(|m| m.det().expect("images are square"))
            .collect();
        LinearCharacter::from_values(Arc::clone(&self.group), values)
    }

    /// A^n = Sym^n twisted by the inverse determinant character.
    pub fn a_power(&self, n: usize) -> Result<Representation, RepError> {
        self.sym_power(n)?.twist(&self.det_character().inverse())
    }

    /// The 3-dimensional adjoint A^2.
    pub fn adjoint(&self) -> Result<Representation, RepError> {
        self.a_power(2)
    }

    /// Per-element traces.
    pub fn character(&self) -> CharacterVector {
        CharacterVector {
            group: Arc::clone(&self.group),
            values: self.images.iter().map(|m| m.trace()).collect(),
        }
    }

    /// Apply a Galois automorphism entrywise to every image; the result is
    /// again a representation of the same group. Requires gcd(k, N) = 1 for
    /// the common conductor N of the images.
    pub fn galois_conjugate(&self, k: i64) -> Result<Representation, RepError> {
        let n = self.conductor();
        let images: Result<Vec<ExactMatrix>, CycError> = self
            .images
            .iter()
            .map(|m| {
                let entries: Result<Vec<CycNum>, CycError> = (0..m.rows())
                    .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                    .map(|(i, j)| m.at(i, j).galois_map(k))
                    .collect();
                Ok(ExactMatrix::from_entries(m.rows(), m.cols(), entries?))
            })
            .collect();
        let _ = n;
        Ok(Representation::new(Arc::clone(&self.group), images?))
    }

    /// Restriction to a subgroup, as a representation of the materialized
    /// subgroup (position j = parent member j).
    pub fn restrict(&self, handle: &SubgroupHandle) -> Representation {
        assert!(
            Arc::ptr_eq(&self.group, handle.parent()),
            "handle belongs to a different group"
        );
        let images = handle.members().iter().map(|&i| self.images[i].clone()).collect();
        Representation::new(Arc::clone(handle.as_group()), images)
    }

    /// The image sigma(G) as a matrix group of its own, together with the
    /// projection map from parent element indices to image indices.
    pub fn image_group(&self) -> (Arc<MatrixGroup>, Vec<usize>) {
        let n = self.group.order();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut class_of = vec![0usize; n];
        let mut elements: Vec<ExactMatrix> = Vec::new();
        let mut first_parent: Vec<usize> = Vec::new();
        for i in 0..n {
            let key = self.images[i].dedup_key();
            let id = *index.entry(key).or_insert_with(|| {
                elements.push(self.images[i].clone());
                first_parent.push(i);
                elements.len() - 1
            });
            class_of[i] = id;
        }
        let q = elements.len();
        let mut mul_table = vec![0usize; q * q];
        for ia in 0..q {
            for ib in 0..q {
                mul_table[ia * q + ib] =
                    class_of[self.group.mul(first_parent[ia], first_parent[ib])];
            }
        }
        let inv_table: Vec<usize> =
            (0..q).map(|ia| class_of[self.group.inv(first_parent[ia])]).collect();
        let mut generator_indices: Vec<usize> = Vec::new();
        for &g in self.group.generator_indices() {
            let id = class_of[g];
            if !generator_indices.contains(&id) {
                generator_indices.push(id);
            }
        }
        if generator_indices.is_empty() {
            generator_indices.push(0);
        }
        let group = Arc::new(MatrixGroup::from_parts(
            self.degree,
            self.conductor(),
            elements,
            mul_table,
            inv_table,
            generator_indices,
        ));
        (group, class_of)
    }

    /// Irreducibility via the character norm: true iff <chi, chi> = 1.
    /// (The intertwiner route hom_dim(rho, rho) = 1 is the independent
    /// cross-check exercised by the test suites.)
    pub fn is_irreducible(&self) -> bool {
        let chi = self.character();
        chi.inner_product(&chi).expect("same group") == CycNum::one()
    }

    /// Character-equality isomorphism test (complete for semisimple
    /// representations of a finite group).
    pub fn is_isomorphic_to(&self, other: &Representation) -> Result<bool, RepError> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        Ok(self.character() == other.character())
    }
}

/// Induction of a character of an index-2 subgroup to the parent group,
/// using the explicit block model with the fixed coset representative c:
/// g in H maps to diag(mu(g), mu(c g c^-1)) and g outside H maps to the
/// antidiagonal matrix with entries mu(c g) and mu(g c^-1).
///
/// This is the induced module on the basis (1 (x) 1, c^-1 (x) 1); placing
/// mu(g c^-1) top-right and mu(c g) bottom-left is what makes the images
/// multiply as sigma(g) sigma(h) = sigma(gh) under the usual left action on
/// column vectors.
pub fn induce_index2(
    mu: &LinearCharacter,
    handle: &SubgroupHandle,
) -> Result<Representation, RepError> {
    if handle.index() != 2 {
        return Err(RepError::NotIndexTwo { index: handle.index() });
    }
    if !Arc::ptr_eq(mu.group(), handle.as_group()) {
        return Err(RepError::CharacterGroupMismatch);
    }
    let parent = handle.parent();
    let c = handle.coset_rep().expect("index-2 handles carry a coset representative");
    let c_inv = parent.inv(c);
    let mu_at = |parent_idx: usize| -> &CycNum {
        let pos = handle.position_of(parent_idx).expect("argument must lie in H");
        mu.value(pos)
    };
    let zero = CycNum::zero();
    let images: Vec<ExactMatrix> = (0..parent.order())
        .map(|g| {
            if handle.contains(g) {
                let conj = parent.mul(parent.mul(c, g), c_inv);
                ExactMatrix::from_entries(
                    2,
                    2,
                    vec![mu_at(g).clone(), zero.clone(), zero.clone(), mu_at(conj).clone()],
                )
            } else {
                let top_right = parent.mul(g, c_inv);
                let bottom_left = parent.mul(c, g);
                ExactMatrix::from_entries(
                    2,
                    2,
                    vec![
                        zero.clone(),
                        mu_at(top_right).clone(),
                        mu_at(bottom_left).clone(),
                        zero.clone(),
                    ],
                )
            }
        })
        .collect();
    Ok(Representation::new(Arc::clone(parent), images))
}

/// The trace function of a representation, one value per group element.
#[derive(Clone)]
pub struct CharacterVector {
    group: Arc<MatrixGroup>,
    values: Vec<CycNum>,
}

impl fmt::Debug for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharacterVector(|G|={})", self.group.order())
    }
}

impl PartialEq for CharacterVector {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for CharacterVector {}

impl CharacterVector {
    pub fn from_values(group: Arc<MatrixGroup>, values: Vec<CycNum>) -> CharacterVector {
        assert_eq!(values.len(), group.order());
        CharacterVector { group, values }
    }

    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn value(&self, i: usize) -> &CycNum {
        &self.values[i]
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    /// Pointwise product: the character of the tensor product.
    pub fn mul(&self, other: &CharacterVector) -> Result<CharacterVector, RepError> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        Ok(CharacterVector {
            group: Arc::clone(&self.group),
            values: self.values.iter().zip(other.values.iter()).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    /// Pointwise sum: the character of the direct sum.
    pub fn add(&self, other: &CharacterVector) -> Result<CharacterVector, RepError> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        Ok(CharacterVector {
            group: Arc::clone(&self.group),
            values: self.values.iter().zip(other.values.iter()).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// The character of the contragredient, via g -> chi(g^-1).
    pub fn dual(&self) -> CharacterVector {
        CharacterVector {
            group: Arc::clone(&self.group),
            values: (0..self.group.order())
                .map(|i| self.values[self.group.inv(i)].clone())
                .collect(),
        }
    }

    pub fn conj(&self) -> CharacterVector {
        CharacterVector {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    /// The standard inner product (1/|G|) sum chi1(g) conj(chi2(g)); a
    /// nonnegative rational integer when both are characters of
    /// representations.
    pub fn inner_product(&self, other: &CharacterVector) -> Result<CycNum, RepError> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        let mut acc = CycNum::zero();
        for (a, b) in self.values.iter().zip(other.values.iter()) {
            acc = acc.add(&a.mul(&b.conj()));
        }
        let order = BigInt::from(self.group.order() as u64);
        Ok(acc.scale(&crate::cyclotomic::BigRational::new(BigInt::from(1), order)))
    }
}

/// A basis of the intertwiner space Hom_G(source, target): matrices X of
/// shape (target degree) x (source degree) with X source(g) = target(g) X.
#[derive(Debug)]
pub struct HomSpace<'a> {
    pub source: &'a Representation,
    pub target: &'a Representation,
    pub basis: Vec<ExactMatrix>,
}

impl HomSpace<'_> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Every basis element intertwines every group element exactly.
    pub fn verify_full(&self) -> bool {
        self.basis.iter().all(|x| {
            (0..self.source.group().order()).all(|g| {
                let lhs = x.mat_mul(self.source.image(g)).expect("shapes match");
                let rhs = self.target.image(g).mat_mul(x).expect("shapes match");
                lhs == rhs
            })
        })
    }
}

/// Basis of Hom_G(source, target), from the nullspace of the stacked linear
/// system X source(g) - target(g) X = 0 over the group generators (the
/// homomorphism property extends the constraint to every element).
pub fn hom_space<'a>(
    source: &'a Representation,
    target: &'a Representation,
) -> Result<HomSpace<'a>, RepError> {
    if !Arc::ptr_eq(source.group(), target.group()) {
        return Err(RepError::GroupMismatch);
    }
    let s = source.degree();
    let t = target.degree();
    let unknowns = t * s;
    let gens = source.group().generator_indices();
    let mut rows: Vec<Vec<CycNum>> = Vec::with_capacity(gens.len() * unknowns);
    for &g in gens {
        let rho = source.image(g);
        let tau = target.image(g);
        for i in 0..t {
            for j in 0..s {
                let mut row = vec![CycNum::zero(); unknowns];
                for k in 0..s {
                    // X[i,k] * rho[k,j]
                    if !rho.at(k, j).is_zero() {
                        let col = i * s + k;
                        row[col] = row[col].add(rho.at(k, j));
                    }
                }
                for k in 0..t {
                    // - tau[i,k] * X[k,j]
                    if !tau.at(i, k).is_zero() {
                        let col = k * s + j;
                        row[col] = row[col].sub(tau.at(i, k));
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = ExactMatrix::from_rows(rows);
    let basis = system
        .nullspace()
        .into_iter()
        .map(|v| {
            let entries: Vec<CycNum> = (0..unknowns).map(|i| v.at(i, 0).clone()).collect();
            ExactMatrix::from_entries(t, s, entries)
        })
        .collect();
    Ok(HomSpace { source, target, basis })
}

/// Dimension of the intertwiner space Hom_G(source, target).
pub fn hom_dim(source: &Representation, target: &Representation) -> Result<usize, RepError> {
    Ok(hom_space(source, target)?.dim())
}
