//! Finite groups with explicit element orderings, group-ring elements over
//! the binary field, and the σ map sending v ∈ F₂G to an n×n binary matrix.
//!
//! Element orderings are pinned per construction because the block shape of
//! σ(v) depends on them: a cyclic group gives a plain circulant, a dihedral
//! group gives CIRC(circ, rcirc), direct products of cyclic groups give
//! block circulants of circulants, and the interleaved cyclic ordering gives
//! the two-by-two block form with a rotated repeat block.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf2::{block_circ, circ, rcirc, BitMatrix, BitWord};

/// Largest supported group order. Keeps every codeword within BitWord
/// capacity (2n ≤ 128) and makes the construction-time associativity sweep
/// cheap.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order {0} out of range (1..={MAX_ORDER})")]
    OrderOutOfRange(usize),
    #[error("dihedral parameter m must be >= 1, got {0}")]
    BadDihedral(usize),
    #[error("elements belong to different groups: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("coefficient vector has length {got}, group order is {want}")]
    CoeffLength { got: usize, want: usize },
    #[error("unrecognized group id {0:?}")]
    BadGroupId(String),
    #[error("group table invalid: {0}")]
    InvalidTable(&'static str),
}

/// Which index varies fastest in the coefficient ordering of a direct
/// product C_p × C_q (x of order q, y of order p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductOrdering {
    /// Coefficient 1+i+qj attaches to x^i y^j: p circulant blocks of size q.
    #[default]
    XFastest,
    /// Coefficient 1+j+pi attaches to x^i y^j: q circulant blocks of size p.
    YFastest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic { n: usize },
    Dihedral { m: usize },
    DirectProduct { p: usize, q: usize, ordering: ProductOrdering },
    InterleavedCyclic { n: usize, k: usize },
}

/// A finite group materialized as a Cayley table over an ordered element
/// list g₁..g_n with g₁ the identity.
pub struct FiniteGroup {
    id: String,
    kind: GroupKind,
    order: usize,
    labels: Vec<String>,
    cayley: Vec<u16>,
    inverse: Vec<u16>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.id, self.order)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.cayley == other.cayley
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    fn build<T: Eq + std::hash::Hash + Clone>(
        id: String,
        kind: GroupKind,
        elems: Vec<T>,
        label: impl Fn(&T) -> String,
        mul: impl Fn(&T, &T) -> T,
    ) -> Result<Arc<Self>, GroupError> {
        let n = elems.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GroupError::OrderOutOfRange(n));
        }
        let mut index = std::collections::HashMap::with_capacity(n);
        for (i, e) in elems.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(GroupError::InvalidTable("duplicate element"));
            }
        }
        let mut cayley = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = mul(&elems[i], &elems[j]);
                let k = *index
                    .get(&prod)
                    .ok_or(GroupError::InvalidTable("product left the element set"))?;
                cayley[i * n + j] = k as u16;
            }
        }
        let labels = elems.iter().map(label).collect();
        let mut g = FiniteGroup {
            id,
            kind,
            order: n,
            labels,
            cayley,
            inverse: vec![0; n],
        };
        g.fill_inverses()?;
        g.validate()?;
        Ok(Arc::new(g))
    }

    fn fill_inverses(&mut self) -> Result<(), GroupError> {
        let n = self.order;
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                if self.cayley[j * n + i] == 0 {
                    if found.is_some() {
                        return Err(GroupError::InvalidTable("multiple inverses"));
                    }
                    found = Some(j as u16);
                }
            }
            self.inverse[i] = found.ok_or(GroupError::InvalidTable("missing inverse"))?;
        }
        Ok(())
    }

    /// Construction-time checks: identity laws, Latin square, inverse law,
    /// and full associativity for orders within [`MAX_ORDER`].
    fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        let c = |i: usize, j: usize| self.cayley[i * n + j] as usize;
        for j in 0..n {
            if c(0, j) != j || c(j, 0) != j {
                return Err(GroupError::InvalidTable("identity law fails"));
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut seen_row[c(i, j)], true)
                    || std::mem::replace(&mut seen_col[c(j, i)], true)
                {
                    return Err(GroupError::InvalidTable("not a Latin square"));
                }
            }
        }
        for i in 0..n {
            if c(self.inverse[i] as usize, i) != 0 {
                return Err(GroupError::InvalidTable("inverse law fails"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    if c(c(a, b), d) != c(a, c(b, d)) {
                        return Err(GroupError::InvalidTable("associativity fails"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Cyclic group C_n, gᵢ = x^{i-1}. σ images are plain circulants.
    pub fn cyclic(n: usize) -> Result<Arc<Self>, GroupError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GroupError::OrderOutOfRange(n));
        }
        Self::build(
            format!("Cn:{n}"),
            GroupKind::Cyclic { n },
            (0..n).collect(),
            |&i| power_label("x", i),
            |&a, &b| (a + b) % n,
        )
    }

    /// Dihedral group of order 2m with x of order m, y of order 2 and
    /// x^y = x^{-1}; coefficient 1+i+mj attaches to y^j x^i. σ images have
    /// block form CIRC(A, B) with A circulant and B reverse-circulant.
    pub fn dihedral(m: usize) -> Result<Arc<Self>, GroupError> {
        if m < 1 {
            return Err(GroupError::BadDihedral(m));
        }
        if 2 * m > MAX_ORDER {
            return Err(GroupError::OrderOutOfRange(2 * m));
        }
        Self::build(
            format!("D:{}", 2 * m),
            GroupKind::Dihedral { m },
            (0..2usize)
                .flat_map(|j| (0..m).map(move |i| (j, i)))
                .collect::<Vec<_>>(),
            |&(j, i)| match (j, i) {
                (0, i) => power_label("x", i),
                (1, 0) => "y".to_string(),
                (1, i) => format!("y {}", power_label("x", i)),
                _ => unreachable!(),
            },
            |&(j1, i1), &(j2, i2)| {
                // y^j1 x^i1 · y^j2 x^i2 = y^(j1+j2) x^(±i1 + i2)
                let s = if j2 == 1 { (m - i1) % m } else { i1 };
                ((j1 + j2) % 2, (s + i2) % m)
            },
        )
    }

    /// Direct product C_p × C_q of cyclic groups (x of order q, y of order
    /// p). With the default ordering, σ images are CIRC(A₁,…,A_p) with
    /// circulant q×q blocks.
    pub fn direct_product_cyclic(
        p: usize,
        q: usize,
        ordering: ProductOrdering,
    ) -> Result<Arc<Self>, GroupError> {
        if p == 0 || q == 0 || p * q > MAX_ORDER {
            return Err(GroupError::OrderOutOfRange(p * q));
        }
        let elems: Vec<(usize, usize)> = match ordering {
            ProductOrdering::XFastest => (0..p)
                .flat_map(|j| (0..q).map(move |i| (i, j)))
                .collect(),
            ProductOrdering::YFastest => (0..q)
                .flat_map(|i| (0..p).map(move |j| (i, j)))
                .collect(),
        };
        Self::build(
            format!("CxC:{p}x{q}"),
            GroupKind::DirectProduct { p, q, ordering },
            elems,
            |&(i, j)| match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => power_label("x", i),
                (0, j) => power_label("y", j),
                (i, j) => format!("{} {}", power_label("x", i), power_label("y", j)),
            },
            |&(i1, j1), &(i2, j2)| ((i1 + i2) % q, (j1 + j2) % p),
        )
    }

    /// Cyclic group of order n·k with the interleaved coefficient ordering:
    /// coefficient 1+i+nj attaches to x^{ki+j}. For k = 2 the σ image has
    /// block form [[A, B], [A', A]] with A' the one-step rotation of B's
    /// defining row.
    pub fn interleaved_cyclic(n: usize, k: usize) -> Result<Arc<Self>, GroupError> {
        if n == 0 || k == 0 || n * k > MAX_ORDER {
            return Err(GroupError::OrderOutOfRange(n * k));
        }
        let order = n * k;
        let id = if (n, k) == (18, 2) {
            "C18_2".to_string()
        } else {
            format!("Cn_k:{n}_{k}")
        };
        Self::build(
            id,
            GroupKind::InterleavedCyclic { n, k },
            (0..k)
                .flat_map(|j| (0..n).map(move |i| (k * i + j) % order))
                .collect::<Vec<_>>(),
            |&t| power_label("x", t),
            |&a, &b| (a + b) % order,
        )
    }

    /// The paper-facing C₁₈,₂ construction.
    pub fn c18_2() -> Result<Arc<Self>, GroupError> {
        Self::interleaved_cyclic(18, 2)
    }

    /// Parse a group id: `Cn:<n>`, `D:<2m>`, `CxC:<p>x<q>`, `C18_2`,
    /// `Cn_k:<n>_<k>`.
    pub fn from_id(id: &str) -> Result<Arc<Self>, GroupError> {
        let bad = || GroupError::BadGroupId(id.to_string());
        if id == "C18_2" {
            return Self::c18_2();
        }
        if let Some(rest) = id.strip_prefix("Cn:") {
            let n = rest.parse().map_err(|_| bad())?;
            return Self::cyclic(n);
        }
        if let Some(rest) = id.strip_prefix("D:") {
            let order: usize = rest.parse().map_err(|_| bad())?;
            if order == 0 || order % 2 != 0 {
                return Err(bad());
            }
            return Self::dihedral(order / 2);
        }
        if let Some(rest) = id.strip_prefix("CxC:") {
            let (p, q) = rest.split_once('x').ok_or_else(bad)?;
            return Self::direct_product_cyclic(
                p.parse().map_err(|_| bad())?,
                q.parse().map_err(|_| bad())?,
                ProductOrdering::XFastest,
            );
        }
        if let Some(rest) = id.strip_prefix("Cn_k:") {
            let (n, k) = rest.split_once('_').ok_or_else(bad)?;
            return Self::interleaved_cyclic(
                n.parse().map_err(|_| bad())?,
                k.parse().map_err(|_| bad())?,
            );
        }
        Err(bad())
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of gᵢ·gⱼ.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// The block-structured σ image this group's ordering guarantees, when
    /// one is known. Used as the golden reference against the generic
    /// Cayley-table σ.
    pub fn block_sigma(&self, coeffs: &BitWord) -> Option<BitMatrix> {
        assert_eq!(coeffs.len(), self.order);
        match self.kind {
            GroupKind::Cyclic { .. } => Some(circ(coeffs).unwrap()),
            GroupKind::Dihedral { m } => {
                let a = circ(&coeffs.slice(0, m)).unwrap();
                let b = rcirc(&coeffs.slice(m, 2 * m)).unwrap();
                Some(block_circ(&[a, b]).unwrap())
            }
            GroupKind::DirectProduct { p, q, ordering } => {
                let (outer, inner) = match ordering {
                    ProductOrdering::XFastest => (p, q),
                    ProductOrdering::YFastest => (q, p),
                };
                let blocks: Vec<BitMatrix> = (0..outer)
                    .map(|b| circ(&coeffs.slice(b * inner, (b + 1) * inner)).unwrap())
                    .collect();
                Some(block_circ(&blocks).unwrap())
            }
            GroupKind::InterleavedCyclic { n, k: 2 } => {
                let a = circ(&coeffs.slice(0, n)).unwrap();
                let b_row = coeffs.slice(n, 2 * n);
                let b = circ(&b_row).unwrap();
                // A' = circ of B's row rotated one step right:
                // (a_{2n}, a_{n+1}, ..., a_{2n-1}).
                let a_prime = circ(&b_row.rotate_right(1)).unwrap();
                let top = a.hstack(&b).unwrap();
                let bottom = a_prime.hstack(&a).unwrap();
                let rows = top
                    .rows()
                    .iter()
                    .chain(bottom.rows().iter())
                    .copied()
                    .collect();
                Some(BitMatrix::from_rows(rows).unwrap())
            }
            GroupKind::InterleavedCyclic { .. } => None,
        }
    }
}

fn power_label(sym: &str, e: usize) -> String {
    match e {
        0 => "1".to_string(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

/// An element of the group ring F₂G: a coefficient bit per group element in
/// the group's stated ordering.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Arc<FiniteGroup>,
    coeffs: BitWord,
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({}, {})", self.group.id(), self.coeffs)
    }
}

impl GroupRingElement {
    pub fn new(group: Arc<FiniteGroup>, coeffs: BitWord) -> Result<Self, GroupError> {
        if coeffs.len() != group.order() {
            return Err(GroupError::CoeffLength {
                got: coeffs.len(),
                want: group.order(),
            });
        }
        Ok(GroupRingElement { group, coeffs })
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let coeffs = BitWord::zeros(group.order());
        GroupRingElement { group, coeffs }
    }

    /// The identity element g₁ of the group, as a ring element.
    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let mut coeffs = BitWord::zeros(group.order());
        coeffs.set(0, true);
        GroupRingElement { group, coeffs }
    }

    pub fn random<R: rand::RngCore>(group: Arc<FiniteGroup>, rng: &mut R) -> Self {
        let coeffs = BitWord::random(group.order(), rng);
        GroupRingElement { group, coeffs }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &BitWord {
        &self.coeffs
    }

    fn check_same_group(&self, other: &Self) -> Result<(), GroupError> {
        if self.group.id() != other.group.id() || self.group.order() != other.group.order() {
            return Err(GroupError::GroupMismatch(
                self.group.id().to_string(),
                other.group.id().to_string(),
            ));
        }
        Ok(())
    }

    /// Coordinatewise addition (XOR in characteristic 2).
    pub fn add(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_same_group(other)?;
        Ok(GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.xor(&other.coeffs),
        })
    }

    /// Group-ring product: convolution over the Cayley table, coefficients
    /// reduced mod 2.
    pub fn mul(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_same_group(other)?;
        let n = self.group.order();
        let mut coeffs = BitWord::zeros(n);
        for i in self.coeffs.ones_iter() {
            for j in other.coeffs.ones_iter() {
                let k = self.group.mul(i, j);
                coeffs.set(k, !coeffs.get(k));
            }
        }
        Ok(GroupRingElement {
            group: self.group.clone(),
            coeffs,
        })
    }

    /// The matrix σ(v): entry (i, j) is the coefficient of g_i⁻¹ g_j.
    /// Row 1 equals the coefficient vector since g₁ is the identity.
    pub fn sigma(&self) -> BitMatrix {
        let n = self.group.order();
        let rows = (0..n)
            .map(|i| {
                let gi_inv = self.group.inv(i);
                BitWord::from_fn(n, |j| self.coeffs.get(self.group.mul(gi_inv, j)))
            })
            .collect();
        BitMatrix::from_rows(rows).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn elem(group: &Arc<FiniteGroup>, bits: &str) -> GroupRingElement {
        GroupRingElement::new(group.clone(), BitWord::from_bit_str(bits)).unwrap()
    }

    #[test]
    fn cyclic_sigma_is_circulant() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let v = elem(&g, "110");
        assert_eq!(v.sigma(), crate::gf2::circ(&BitWord::from_bit_str("110")).unwrap());
    }

    #[test]
    fn sigma_of_identity_is_identity_matrix() {
        for g in [
            FiniteGroup::cyclic(7).unwrap(),
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::direct_product_cyclic(3, 4, ProductOrdering::XFastest).unwrap(),
            FiniteGroup::interleaved_cyclic(3, 2).unwrap(),
        ] {
            let v = GroupRingElement::identity(g.clone());
            assert!(v.sigma().is_identity(), "{}", g.id());
        }
    }

    #[test]
    fn dihedral_order6_block_form() {
        // order-6 analog of the order-34 dihedral construction
        let g = FiniteGroup::dihedral(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v = GroupRingElement::random(g.clone(), &mut rng);
            assert_eq!(v.sigma(), g.block_sigma(v.coeffs()).unwrap());
        }
    }

    #[test]
    fn gr_add_examples() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let u = elem(&g, "101");
        let v = elem(&g, "110");
        assert_eq!(u.add(&u).unwrap().coeffs(), &BitWord::zeros(3));
        assert_eq!(u.add(&GroupRingElement::zero(g.clone())).unwrap(), u);
        assert_eq!(u.add(&v).unwrap().coeffs(), &BitWord::from_bit_str("011"));
    }

    #[test]
    fn gr_add_rejects_group_mismatch() {
        let u = GroupRingElement::identity(FiniteGroup::cyclic(3).unwrap());
        let v = GroupRingElement::identity(FiniteGroup::cyclic(4).unwrap());
        assert!(u.add(&v).is_err());
        assert!(u.mul(&v).is_err());
    }

    #[test]
    fn gr_mul_examples() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let x = elem(&c3, "010");
        assert_eq!(x.mul(&x).unwrap(), elem(&c3, "001")); // x·x = x²
        let u = elem(&c3, "110");
        assert_eq!(u.mul(&GroupRingElement::identity(c3.clone())).unwrap(), u);

        let c4 = FiniteGroup::cyclic(4).unwrap();
        let one_plus_x = elem(&c4, "1100");
        // (1+x)² = 1 + x² in characteristic 2
        assert_eq!(one_plus_x.mul(&one_plus_x).unwrap(), elem(&c4, "1010"));
    }

    #[test]
    fn dihedral_m2_is_klein_like() {
        let g = FiniteGroup::dihedral(2).unwrap();
        assert_eq!(g.order(), 4);
        // all non-identity elements are involutions
        for i in 1..4 {
            assert_eq!(g.inv(i), i);
        }
    }

    #[test]
    fn dihedral_rejects_m0() {
        assert_eq!(FiniteGroup::dihedral(0), Err(GroupError::BadDihedral(0)));
    }

    #[test]
    fn degenerate_product_is_cyclic() {
        let prod = FiniteGroup::direct_product_cyclic(1, 6, ProductOrdering::XFastest).unwrap();
        let cyc = FiniteGroup::cyclic(6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let bits = BitWord::random(6, &mut rng);
            let vp = GroupRingElement::new(prod.clone(), bits).unwrap();
            let vc = GroupRingElement::new(cyc.clone(), bits).unwrap();
            assert_eq!(vp.sigma(), vc.sigma());
        }
    }

    #[test]
    fn interleaved_c3_2_matches_block_form_exhaustively() {
        let g = FiniteGroup::interleaved_cyclic(3, 2).unwrap();
        for value in 0..(1u64 << 6) {
            let bits = BitWord::from_uint(value, 6);
            let v = GroupRingElement::new(g.clone(), bits).unwrap();
            assert_eq!(v.sigma(), g.block_sigma(&bits).unwrap(), "value {value}");
        }
    }

    #[test]
    fn c18_2_top_left_block_is_circulant_of_first_half() {
        let g = FiniteGroup::c18_2().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let v = GroupRingElement::random(g.clone(), &mut rng);
            let s = v.sigma();
            let a = crate::gf2::circ(&v.coeffs().slice(0, 18)).unwrap();
            for i in 0..18 {
                for j in 0..18 {
                    assert_eq!(s.get(i, j), a.get(i, j));
                }
            }
            assert_eq!(s, g.block_sigma(v.coeffs()).unwrap());
        }
    }

    #[test]
    fn sigma_homomorphism_on_small_groups() {
        let groups = vec![
            FiniteGroup::cyclic(9).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::direct_product_cyclic(2, 5, ProductOrdering::XFastest).unwrap(),
            FiniteGroup::direct_product_cyclic(2, 5, ProductOrdering::YFastest).unwrap(),
            FiniteGroup::interleaved_cyclic(5, 2).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for g in groups {
            for _ in 0..50 {
                let u = GroupRingElement::random(g.clone(), &mut rng);
                let v = GroupRingElement::random(g.clone(), &mut rng);
                let add = u.add(&v).unwrap();
                assert_eq!(add.sigma(), u.sigma().xor(&v.sigma()).unwrap());
                let prod = u.mul(&v).unwrap();
                assert_eq!(
                    prod.sigma(),
                    u.sigma().mat_mul(&v.sigma()).unwrap(),
                    "multiplicative failure on {}",
                    g.id()
                );
            }
        }
    }

    #[test]
    fn sigma_rows_are_permutations_of_row_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for g in [
            FiniteGroup::dihedral(9).unwrap(),
            FiniteGroup::interleaved_cyclic(9, 2).unwrap(),
        ] {
            for _ in 0..20 {
                let v = GroupRingElement::random(g.clone(), &mut rng);
                let s = v.sigma();
                let w = s.row(0).weight();
                for i in 0..g.order() {
                    assert_eq!(s.row(i).weight(), w);
                }
            }
        }
    }

    #[test]
    fn group_id_round_trip() {
        for id in ["Cn:16", "D:34", "D:36", "CxC:2x18", "CxC:4x9", "CxC:3x12", "C18_2", "Cn_k:5_2"] {
            let g = FiniteGroup::from_id(id).unwrap();
            assert_eq!(g.id(), id);
        }
        for bad in ["", "Cn:", "D:35", "D:0", "CxC:2", "Q:8", "Cn_k:4", "Cn:99"] {
            assert!(FiniteGroup::from_id(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn paper_groups_have_expected_orders() {
        assert_eq!(FiniteGroup::dihedral(17).unwrap().order(), 34);
        assert_eq!(FiniteGroup::dihedral(18).unwrap().order(), 36);
        assert_eq!(
            FiniteGroup::direct_product_cyclic(2, 18, ProductOrdering::XFastest)
                .unwrap()
                .order(),
            36
        );
        assert_eq!(FiniteGroup::c18_2().unwrap().order(), 36);
    }
}
