//! Finite matrix groups by generator closure.
//!
//! A [`MatrixGroup`] stores every element explicitly together with full
//! multiplication and inverse tables, so all later group theory (characters,
//! subgroups, projective quotients) is pure index arithmetic. The closure
//! lifts all generators to one common conductor up front; products then stay
//! at that conductor and element identity is exact coefficient comparison.
//!
//! The binary polyhedral families are built from explicit quaternion and
//! icosian generators; their orders (4n, 24, 48, 120) are certified by the
//! closure itself, not assumed.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{lcm_u32, CycError, CycNum};
use crate::linalg::{ExactMatrix, LinAlgError};

/// Default cap for generator closure; the largest in-scope group has order
/// 240 after adjoining scalars, so 512 leaves headroom.
pub const DEFAULT_CLOSURE_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// Closure exceeded the cap: the generators span an infinite or
    /// too-large group.
    CapExceeded { cap: usize },
    NonInvertibleGenerator { index: usize },
    NonSquareGenerator { index: usize },
    MixedDimensions,
    EmptyGenerators,
    /// projective classification requires 2x2 matrices
    NotDimensionTwo { dim: usize },
    /// the member set is not closed under the parent tables
    NotASubgroup,
    /// no polyhedral pattern matched: impossible for finite subgroups of
    /// PGL2 in characteristic zero, so this signals a bug
    UnclassifiableProjectiveImage,
    NotIndexTwo { index: usize },
    Cyc(CycError),
    LinAlg(LinAlgError),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::CapExceeded { cap } => {
                write!(f, "group closure exceeded cap {cap} (infinite or too-large group)")
            }
            GroupError::NonInvertibleGenerator { index } => {
                write!(f, "generator {index} is not invertible")
            }
            GroupError::NonSquareGenerator { index } => {
                write!(f, "generator {index} is not square")
            }
            GroupError::MixedDimensions => write!(f, "generators have mixed dimensions"),
            GroupError::EmptyGenerators => write!(f, "no generators supplied"),
            GroupError::NotDimensionTwo { dim } => {
                write!(f, "projective classification needs dimension 2, got {dim}")
            }
            GroupError::NotASubgroup => write!(f, "member set is not a subgroup"),
            GroupError::UnclassifiableProjectiveImage => {
                write!(f, "projective image matches no finite subgroup of PGL2 (bug)")
            }
            GroupError::NotIndexTwo { index } => {
                write!(f, "subgroup has index {index}, expected 2")
            }
            GroupError::Cyc(e) => write!(f, "{e}"),
            GroupError::LinAlg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GroupError {}

impl From<CycError> for GroupError {
    fn from(e: CycError) -> Self {
        GroupError::Cyc(e)
    }
}

impl From<LinAlgError> for GroupError {
    fn from(e: LinAlgError) -> Self {
        GroupError::LinAlg(e)
    }
}

/// The polyhedral families; constructor input for [`binary_polyhedral`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyhedralFamily {
    /// Binary dihedral (dicyclic) of order 4n, n >= 2.
    Dihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

/// Classification of a finite subgroup of PGL2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyhedralType {
    Cyclic,
    Dihedral,
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl fmt::Display for PolyhedralType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PolyhedralType::Cyclic => "cyclic",
            PolyhedralType::Dihedral => "dihedral",
            PolyhedralType::Tetrahedral => "tetrahedral",
            PolyhedralType::Octahedral => "octahedral",
            PolyhedralType::Icosahedral => "icosahedral",
        };
        write!(f, "{s}")
    }
}

/// A finite subgroup of GL_m given by explicit elements, with full
/// multiplication bookkeeping. Element 0 is always the identity.
pub struct MatrixGroup {
    dim: usize,
    conductor: u32,
    elements: Vec<ExactMatrix>,
    mul_table: Vec<usize>,
    inv_table: Vec<usize>,
    generator_indices: Vec<usize>,
    /// element i (i > 0 reachable from generators) was first reached as
    /// `elements[parent] * elements[generator_indices[gen_slot]]`
    provenance: Vec<Option<(usize, usize)>>,
    /// indices in breadth-first discovery order (provenance parents appear
    /// before their children in this order)
    bfs_order: Vec<usize>,
}

impl fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MatrixGroup(dim={}, order={}, conductor={})",
            self.dim,
            self.elements.len(),
            self.conductor
        )
    }
}

impl MatrixGroup {
    /// Breadth-first closure of a generator set into a finite group.
    pub fn close(generators: &[ExactMatrix], cap: usize) -> Result<Arc<MatrixGroup>, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        let dim = generators[0].rows();
        let mut conductor = 1u32;
        for (i, g) in generators.iter().enumerate() {
            if !g.is_square() {
                return Err(GroupError::NonSquareGenerator { index: i });
            }
            if g.rows() != dim {
                return Err(GroupError::MixedDimensions);
            }
            if g.det()?.is_zero() {
                return Err(GroupError::NonInvertibleGenerator { index: i });
            }
            conductor = lcm_u32(conductor, g.conductor());
        }
        let gens: Vec<ExactMatrix> = generators
            .iter()
            .map(|g| g.lift_to(conductor))
            .collect::<Result<_, _>>()?;

        let identity = ExactMatrix::identity(dim).lift_to(conductor)?;
        let mut elements = vec![identity];
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        index.insert(elements[0].dedup_key(), 0);
        let mut provenance: Vec<Option<(usize, usize)>> = vec![None];
        let mut cursor = 0usize;
        while cursor < elements.len() {
            for (slot, g) in gens.iter().enumerate() {
                let product = elements[cursor].mat_mul(g)?;
                let key = product.dedup_key();
                if !index.contains_key(&key) {
                    elements.push(product);
                    provenance.push(Some((cursor, slot)));
                    index.insert(key, elements.len() - 1);
                    if elements.len() > cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                }
            }
            cursor += 1;
        }
        let n = elements.len();

        // generator element indices (dedup, order preserved)
        let mut generator_indices = Vec::new();
        for g in &gens {
            let idx = index[&g.dedup_key()];
            if !generator_indices.contains(&idx) {
                generator_indices.push(idx);
            }
        }

        // Full multiplication table with only |G| * #gens matrix products:
        // column 0 is trivial, generator columns come from matrix products,
        // and every other column b with provenance b = p * g satisfies
        // table[a][b] = table[table[a][p]][g].
        let mut mul_table = vec![usize::MAX; n * n];
        for a in 0..n {
            mul_table[a * n] = a;
        }
        let mut gen_elem_col: Vec<usize> = Vec::with_capacity(gens.len());
        for g in &gens {
            gen_elem_col.push(index[&g.dedup_key()]);
        }
        for (slot, g) in gens.iter().enumerate() {
            let col = gen_elem_col[slot];
            for a in 0..n {
                if mul_table[a * n + col] == usize::MAX {
                    let product = elements[a].mat_mul(g)?;
                    mul_table[a * n + col] = index[&product.dedup_key()];
                }
            }
        }
        for b in 1..n {
            if mul_table[b] != usize::MAX {
                continue; // generator column, already done (row 0 filled means all filled)
            }
            let (p, slot) = provenance[b].expect("non-identity closure element has provenance");
            let gcol = gen_elem_col[slot];
            for a in 0..n {
                let ap = mul_table[a * n + p];
                mul_table[a * n + b] = mul_table[ap * n + gcol];
            }
        }
        debug_assert!(mul_table.iter().all(|&x| x != usize::MAX));

        let mut inv_table = vec![0usize; n];
        for a in 0..n {
            inv_table[a] = (0..n).find(|&b| mul_table[a * n + b] == 0).expect("group inverse");
        }

        let bfs_order = (0..n).collect();
        Ok(Arc::new(MatrixGroup {
            dim,
            conductor,
            elements,
            mul_table,
            inv_table,
            generator_indices,
            provenance,
            bfs_order,
        }))
    }

    /// Assemble a group from precomputed parts (subgroup materialization and
    /// image groups); recomputes provenance by index-level BFS.
    pub(crate) fn from_parts(
        dim: usize,
        conductor: u32,
        elements: Vec<ExactMatrix>,
        mul_table: Vec<usize>,
        inv_table: Vec<usize>,
        generator_indices: Vec<usize>,
    ) -> MatrixGroup {
        let n = elements.len();
        debug_assert_eq!(mul_table.len(), n * n);
        debug_assert!(elements[0].is_identity());
        let mut provenance: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut bfs_order = vec![0usize];
        let mut cursor = 0usize;
        while cursor < bfs_order.len() {
            let a = bfs_order[cursor];
            for (slot, &g) in generator_indices.iter().enumerate() {
                let child = mul_table[a * n + g];
                if !seen[child] {
                    seen[child] = true;
                    provenance[child] = Some((a, slot));
                    bfs_order.push(child);
                }
            }
            cursor += 1;
        }
        assert!(seen.iter().all(|&s| s), "generators do not span the group");
        MatrixGroup {
            dim,
            conductor,
            elements,
            mul_table,
            inv_table,
            generator_indices,
            provenance,
            bfs_order,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &ExactMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[ExactMatrix] {
        &self.elements
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub(crate) fn provenance(&self) -> &[Option<(usize, usize)>] {
        &self.provenance
    }

    pub(crate) fn bfs_order(&self) -> &[usize] {
        &self.bfs_order
    }

    /// Index of the product of elements `a * b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.elements.len() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv_table[a]
    }

    /// Multiplicative order of element `i`.
    pub fn order_of(&self, i: usize) -> usize {
        let mut k = 1usize;
        let mut acc = i;
        while acc != 0 {
            acc = self.mul(acc, i);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Indices of scalar matrices (the center candidates lambda*I).
    pub fn scalar_indices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.elements[i].as_scalar().is_some()).collect()
    }

    /// The commutator subgroup as a sorted index list, by closing the set of
    /// all commutators under multiplication (conjugation closure is automatic
    /// because the commutator set is conjugation-stable).
    pub fn commutator_subgroup_indices(&self) -> Vec<usize> {
        let n = self.order();
        let mut set = alloc::collections::BTreeSet::new();
        set.insert(0usize);
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                set.insert(c);
            }
        }
        loop {
            let snapshot: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &x in &snapshot {
                for &y in &snapshot {
                    set.insert(self.mul(x, y));
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.into_iter().collect()
    }

    /// Wrap a closed member set as a subgroup handle; `members` must contain
    /// the identity and be closed under the parent tables.
    pub fn subgroup(self: &Arc<Self>, members: Vec<usize>) -> Result<SubgroupHandle, GroupError> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(GroupError::NotASubgroup);
        }
        let pos_of = |i: usize| members.binary_search(&i).ok();
        for &a in &members {
            if pos_of(self.inv(a)).is_none() {
                return Err(GroupError::NotASubgroup);
            }
            for &b in &members {
                if pos_of(self.mul(a, b)).is_none() {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        let coset_rep = if self.order() == 2 * members.len() {
            (0..self.order()).find(|i| pos_of(*i).is_none())
        } else {
            None
        };

        // materialize the subgroup as a group in its own right, preserving
        // member order (so position j corresponds to parent index members[j])
        let sub_n = members.len();
        let elements: Vec<ExactMatrix> = members.iter().map(|&i| self.elements[i].clone()).collect();
        let mut mul_table = vec![0usize; sub_n * sub_n];
        for (ia, &a) in members.iter().enumerate() {
            for (ib, &b) in members.iter().enumerate() {
                mul_table[ia * sub_n + ib] =
                    pos_of(self.mul(a, b)).expect("closure checked above");
            }
        }
        let inv_table: Vec<usize> =
            members.iter().map(|&a| pos_of(self.inv(a)).expect("closure")).collect();

        // greedy generating set: repeatedly adjoin the smallest element not
        // yet generated
        let mut gen_positions: Vec<usize> = Vec::new();
        let mut reached = vec![false; sub_n];
        reached[0] = true;
        let mut reached_count = 1usize;
        while reached_count < sub_n {
            let next = (0..sub_n).find(|&p| !reached[p]).expect("count < n");
            gen_positions.push(next);
            // re-close from scratch over current generators
            reached.iter_mut().for_each(|r| *r = false);
            reached[0] = true;
            reached_count = 1;
            let mut queue = vec![0usize];
            let mut qc = 0usize;
            while qc < queue.len() {
                let a = queue[qc];
                for &g in &gen_positions {
                    let child = mul_table[a * sub_n + g];
                    if !reached[child] {
                        reached[child] = true;
                        reached_count += 1;
                        queue.push(child);
                    }
                }
                qc += 1;
            }
        }
        if gen_positions.is_empty() {
            gen_positions.push(0); // trivial subgroup still needs a generator slot
        }

        let group = Arc::new(MatrixGroup::from_parts(
            self.dim,
            self.conductor,
            elements,
            mul_table,
            inv_table,
            gen_positions,
        ));
        Ok(SubgroupHandle { parent: Arc::clone(self), members, coset_rep, group })
    }

    /// Quotient by a normal subgroup, at the index level: returns the class
    /// representative (minimal member index) for each element and the class
    /// multiplication table.
    fn quotient_tables(&self, normal: &[usize]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            // coset a*N
            for &h in normal {
                class_of[self.mul(a, h)] = id;
            }
            reps.push(a);
        }
        let q = reps.len();
        let mut table = vec![0usize; q * q];
        for (ia, &a) in reps.iter().enumerate() {
            for (ib, &b) in reps.iter().enumerate() {
                table[ia * q + ib] = class_of[self.mul(a, b)];
            }
        }
        (class_of, reps, table)
    }

    /// Order of the image in PGL (order divided by the scalar subgroup).
    pub fn projective_order(&self) -> usize {
        self.order() / self.scalar_indices().len()
    }

    /// Multiset of element orders in the projective image, as order -> count.
    pub fn projective_order_statistics(&self) -> BTreeMap<usize, usize> {
        let scalars = self.scalar_indices();
        let (_, reps, table) = self.quotient_tables(&scalars);
        let q = reps.len();
        let ord = |i: usize| {
            let mut k = 1usize;
            let mut acc = i;
            while acc != 0 {
                acc = table[acc * q + i];
                k += 1;
            }
            k
        };
        let mut stats: BTreeMap<usize, usize> = BTreeMap::new();
        for c in 0..q {
            *stats.entry(ord(c)).or_insert(0) += 1;
        }
        stats
    }

    /// Classify the image J = G/(scalars in G) inside PGL2.
    ///
    /// The dihedral test (a cyclic subgroup of index two, equivalently an
    /// element of order |J|/2 in nonabelian J) runs before the order-profile
    /// tests: dihedral groups of order 12 and 24 would otherwise collide
    /// with the tetrahedral and octahedral patterns. The exact order
    /// multisets of A4, S4 and A5 are then matched in full.
    pub fn projective_classify(&self) -> Result<PolyhedralType, GroupError> {
        if self.dim != 2 {
            return Err(GroupError::NotDimensionTwo { dim: self.dim });
        }
        let scalars = self.scalar_indices();
        let (_, reps, table) = self.quotient_tables(&scalars);
        let q = reps.len();
        let mul = |a: usize, b: usize| table[a * q + b];
        let ord = |i: usize| {
            let mut k = 1usize;
            let mut acc = i;
            while acc != 0 {
                acc = mul(acc, i);
                k += 1;
            }
            k
        };
        let orders: Vec<usize> = (0..q).map(ord).collect();
        let abelian = (0..q).all(|a| (a..q).all(|b| mul(a, b) == mul(b, a)));

        if abelian {
            if orders.iter().any(|&o| o == q) {
                return Ok(PolyhedralType::Cyclic);
            }
            // the only non-cyclic abelian subgroup of PGL2 is Klein four,
            // which is the degenerate dihedral group
            if q == 4 && orders.iter().all(|&o| o <= 2) {
                return Ok(PolyhedralType::Dihedral);
            }
            return Err(GroupError::UnclassifiableProjectiveImage);
        }
        if q % 2 == 0 && orders.iter().any(|&o| o == q / 2) {
            return Ok(PolyhedralType::Dihedral);
        }
        let mut stats: BTreeMap<usize, usize> = BTreeMap::new();
        for &o in &orders {
            *stats.entry(o).or_insert(0) += 1;
        }
        let profile: Vec<(usize, usize)> = stats.into_iter().collect();
        match (q, profile.as_slice()) {
            (12, [(1, 1), (2, 3), (3, 8)]) => Ok(PolyhedralType::Tetrahedral),
            (24, [(1, 1), (2, 9), (3, 8), (4, 6)]) => Ok(PolyhedralType::Octahedral),
            (60, [(1, 1), (2, 15), (3, 20), (5, 24)]) => Ok(PolyhedralType::Icosahedral),
            _ => Err(GroupError::UnclassifiableProjectiveImage),
        }
    }
}

/// A subgroup of a [`MatrixGroup`], with a fixed coset representative when
/// the index is two, plus a materialized group structure of its own
/// (position j of the materialized group is parent element `members[j]`).
#[derive(Clone)]
pub struct SubgroupHandle {
    parent: Arc<MatrixGroup>,
    members: Vec<usize>,
    coset_rep: Option<usize>,
    group: Arc<MatrixGroup>,
}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubgroupHandle(order={}, index={}, coset_rep={:?})",
            self.members.len(),
            self.index(),
            self.coset_rep
        )
    }
}

impl SubgroupHandle {
    pub fn parent(&self) -> &Arc<MatrixGroup> {
        &self.parent
    }

    /// Sorted parent indices of the members.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    /// The fixed coset representative c with G = H + cH, present iff the
    /// index is two.
    pub fn coset_rep(&self) -> Option<usize> {
        self.coset_rep
    }

    pub fn contains(&self, parent_idx: usize) -> bool {
        self.members.binary_search(&parent_idx).is_ok()
    }

    /// Position of a parent element inside the materialized subgroup.
    pub fn position_of(&self, parent_idx: usize) -> Option<usize> {
        self.members.binary_search(&parent_idx).ok()
    }

    /// The subgroup as a standalone group (element j = parent members[j]).
    pub fn as_group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    /// Whole-group handle.
    pub fn whole(parent: &Arc<MatrixGroup>) -> SubgroupHandle {
        parent.subgroup((0..parent.order()).collect()).expect("whole group is a subgroup")
    }
}

/// A 1-dimensional character of a finite matrix group, stored per element.
/// Values are roots of unity and multiply along the group law.
#[derive(Clone)]
pub struct LinearCharacter {
    group: Arc<MatrixGroup>,
    values: Vec<CycNum>,
}

impl fmt::Debug for LinearCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCharacter(order={})", self.order())
    }
}

impl PartialEq for LinearCharacter {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for LinearCharacter {}

impl LinearCharacter {
    pub fn trivial(group: &Arc<MatrixGroup>) -> LinearCharacter {
        LinearCharacter { group: Arc::clone(group), values: vec![CycNum::one(); group.order()] }
    }

    /// Wrap explicit per-element values. The values must be multiplicative
    /// over the group law (checked in debug builds).
    pub fn from_values(group: Arc<MatrixGroup>, values: Vec<CycNum>) -> LinearCharacter {
        assert_eq!(values.len(), group.order());
        debug_assert!(
            (0..group.order()).all(|a| {
                group
                    .generator_indices()
                    .iter()
                    .all(|&g| values[group.mul(a, g)] == values[a].mul(&values[g]))
            }),
            "values are not multiplicative"
        );
        LinearCharacter { group, values }
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

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    /// Multiplicative order: the least k >= 1 with chi^k trivial.
    pub fn order(&self) -> usize {
        let mut powers: Vec<CycNum> = self.values.clone();
        let mut k = 1usize;
        loop {
            if powers.iter().all(|v| v.is_one()) {
                return k;
            }
            for (p, v) in powers.iter_mut().zip(self.values.iter()) {
                *p = p.mul(v);
            }
            k += 1;
            assert!(k <= self.group.order() + 1, "character order out of range");
        }
    }

    pub fn mul(&self, other: &LinearCharacter) -> LinearCharacter {
        assert!(Arc::ptr_eq(&self.group, &other.group), "characters on different groups");
        LinearCharacter {
            group: Arc::clone(&self.group),
            values: self.values.iter().zip(other.values.iter()).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    /// Inverse character; values are roots of unity, so the inverse is the
    /// complex conjugate.
    pub fn inverse(&self) -> LinearCharacter {
        LinearCharacter {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> LinearCharacter {
        if e < 0 {
            return self.inverse().pow(-e);
        }
        let mut out = LinearCharacter::trivial(&self.group);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The kernel as a subgroup handle, with a coset representative fixed
    /// when the index is two.
    pub fn kernel_subgroup(&self) -> SubgroupHandle {
        let members: Vec<usize> =
            (0..self.group.order()).filter(|&i| self.values[i].is_one()).collect();
        self.group.subgroup(members).expect("kernel of a character is a subgroup")
    }
}

/// All homomorphisms from the group into the roots of unity.
///
/// Candidates assign to each generator a root of unity of order dividing the
/// generator's order; an assignment extends to the whole group along the BFS
/// provenance and survives only if it is multiplicative against every
/// (element, generator) pair, which forces full multiplicativity. Surviving
/// characters are then verified against the complete multiplication table.
/// The trivial character always comes first in the returned list.
pub fn linear_characters(group: &Arc<MatrixGroup>) -> Vec<LinearCharacter> {
    let n = group.order();
    let gens = group.generator_indices();
    let gen_orders: Vec<usize> = gens.iter().map(|&g| group.order_of(g)).collect();
    let mut found = Vec::new();

    // odometer over candidate exponent tuples, last slot fastest
    let mut exps = vec![0usize; gens.len()];
    'outer: loop {
        let assignment: Vec<CycNum> = exps
            .iter()
            .zip(gen_orders.iter())
            .map(|(&t, &d)| CycNum::root_of_unity(d as u32, t as i64))
            .collect();

        // extend along provenance in BFS order
        let mut values: Vec<Option<CycNum>> = vec![None; n];
        values[0] = Some(CycNum::one());
        for &i in group.bfs_order() {
            if i == 0 {
                continue;
            }
            let (p, slot) = group.provenance()[i].expect("reachable");
            let pv = values[p].clone().expect("BFS order");
            values[i] = Some(pv.mul(&assignment[slot]));
        }
        let values: Vec<CycNum> = values.into_iter().map(|v| v.expect("spanning")).collect();

        // multiplicativity against every (element, generator) pair suffices
        let mut ok = true;
        'check: for a in 0..n {
            for (slot, &g) in gens.iter().enumerate() {
                if values[group.mul(a, g)] != values[a].mul(&assignment[slot]) {
                    ok = false;
                    break 'check;
                }
            }
        }
        if ok {
            // full-table verification for survivors
            let full = (0..n)
                .all(|a| (0..n).all(|b| values[group.mul(a, b)] == values[a].mul(&values[b])));
            assert!(full, "survivor failed full multiplication table verification");
            found.push(LinearCharacter { group: Arc::clone(group), values });
        }

        // advance odometer
        for slot in (0..exps.len()).rev() {
            exps[slot] += 1;
            if exps[slot] < gen_orders[slot] {
                continue 'outer;
            }
            exps[slot] = 0;
        }
        break;
    }
    found
}

// ---------------------------------------------------------------------------
// Binary polyhedral constructors.
// ---------------------------------------------------------------------------

/// The quaternion a + bi + cj + dk as a 2x2 matrix over Q(zeta_4, ...):
/// [[a+bi, c+di], [-c+di, a-bi]].
pub fn quaternion_matrix(a: &CycNum, b: &CycNum, c: &CycNum, d: &CycNum) -> ExactMatrix {
    let i = CycNum::root_of_unity(4, 1);
    let bi = b.mul(&i);
    let di = d.mul(&i);
    ExactMatrix::from_entries(
        2,
        2,
        vec![a.add(&bi), c.add(&di), di.sub(c), a.sub(&bi)],
    )
}

/// Square root of 2 as zeta_8 + zeta_8^-1.
pub fn sqrt2() -> CycNum {
    CycNum::root_of_unity(8, 1).add(&CycNum::root_of_unity(8, 7))
}

/// Square root of 5 as the Gauss sum zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4.
pub fn sqrt5() -> CycNum {
    CycNum::root_of_unity(5, 1)
        .sub(&CycNum::root_of_unity(5, 2))
        .sub(&CycNum::root_of_unity(5, 3))
        .add(&CycNum::root_of_unity(5, 4))
}

/// Generator matrices for a binary polyhedral family.
pub fn binary_polyhedral_generators(kind: PolyhedralFamily) -> Vec<ExactMatrix> {
    let half = CycNum::from_ratio(1, 2);
    match kind {
        PolyhedralFamily::Dihedral(n) => {
            assert!(n >= 2, "dihedral parameter must be at least 2");
            let z = CycNum::root_of_unity(2 * n, 1);
            let zinv = CycNum::root_of_unity(2 * n, 2 * n as i64 - 1);
            let r = ExactMatrix::diagonal(vec![z, zinv]);
            let s = ExactMatrix::from_entries(
                2,
                2,
                vec![
                    CycNum::zero(),
                    CycNum::one(),
                    CycNum::from_integer(-1),
                    CycNum::zero(),
                ],
            );
            vec![r, s]
        }
        PolyhedralFamily::Tetrahedral => {
            let qi = quaternion_matrix(
                &CycNum::zero(),
                &CycNum::one(),
                &CycNum::zero(),
                &CycNum::zero(),
            );
            let omega = quaternion_matrix(&half, &half, &half, &half);
            vec![qi, omega]
        }
        PolyhedralFamily::Octahedral => {
            let mut gens = binary_polyhedral_generators(PolyhedralFamily::Tetrahedral);
            let s = sqrt2().scale(&crate::cyclotomic::BigRational::new(
                num_bigint::BigInt::from(1),
                num_bigint::BigInt::from(2),
            ));
            // (1 + i)/sqrt(2), an order-8 element
            gens.push(quaternion_matrix(&s, &s, &CycNum::zero(), &CycNum::zero()));
            gens
        }
        PolyhedralFamily::Icosahedral => {
            let omega = quaternion_matrix(&half, &half, &half, &half);
            // golden ratio phi = (1 + sqrt 5)/2 and its inverse phi - 1
            let phi = CycNum::one().add(&sqrt5()).scale(&crate::cyclotomic::BigRational::new(
                num_bigint::BigInt::from(1),
                num_bigint::BigInt::from(2),
            ));
            let phi_inv = phi.sub(&CycNum::one());
            let iota = quaternion_matrix(
                &phi_inv.mul(&half),
                &phi.mul(&half),
                &half,
                &CycNum::zero(),
            );
            vec![omega, iota]
        }
    }
}

/// Expected order of each binary polyhedral family.
pub fn binary_polyhedral_order(kind: PolyhedralFamily) -> usize {
    match kind {
        PolyhedralFamily::Dihedral(n) => 4 * n as usize,
        PolyhedralFamily::Tetrahedral => 24,
        PolyhedralFamily::Octahedral => 48,
        PolyhedralFamily::Icosahedral => 120,
    }
}

/// Build a binary polyhedral group with an explicit closure cap.
pub fn binary_polyhedral_with_cap(
    kind: PolyhedralFamily,
    cap: usize,
) -> Result<Arc<MatrixGroup>, GroupError> {
    let group = MatrixGroup::close(&binary_polyhedral_generators(kind), cap)?;
    assert_eq!(
        group.order(),
        binary_polyhedral_order(kind),
        "binary polyhedral generators produced the wrong order"
    );
    Ok(group)
}

/// Build a binary polyhedral group: the binary cover of the corresponding
/// rotation group, as explicit 2x2 matrices.
pub fn binary_polyhedral(kind: PolyhedralFamily) -> Result<Arc<MatrixGroup>, GroupError> {
    binary_polyhedral_with_cap(kind, DEFAULT_CLOSURE_CAP)
}
