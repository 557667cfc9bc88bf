//! Bit-packed linear algebra over the binary field.
//!
//! Rows and coefficient vectors are [`BitWord`]s: up to 128 bits packed into
//! two machine words, with everything above the logical length held at zero so
//! equality and hashing are plain bitwise comparisons. All inner products are
//! word-wise AND + popcount parity, which is the dominant cost of every
//! enumeration downstream.

use std::fmt;
use thiserror::Error;

/// Hard capacity of a [`BitWord`]. Codes here have length at most 2n = 128.
pub const MAX_BITS: usize = 128;
const WORDS: usize = 2;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: {left} vs {right} for {op}")]
    DimensionMismatch {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("empty row")]
    EmptyRow,
    #[error("block sizes are ragged or blocks are not square")]
    RaggedBlocks,
    #[error("bad hex {input:?} for bit length {len}: {reason}")]
    BadHex {
        input: String,
        len: usize,
        reason: &'static str,
    },
}

/// A packed binary vector of logical length `len <= 128`.
///
/// Bit `i` holds coefficient a_{i+1}; bits at positions `>= len` are always
/// zero (canonical padding).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    words: [u64; WORDS],
    len: usize,
}

impl BitWord {
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_BITS, "BitWord capacity is {MAX_BITS} bits");
        BitWord {
            words: [0; WORDS],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut w = Self::zeros(len);
        for i in 0..len {
            w.set(i, true);
        }
        w
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = [0u64; WORDS];
        let mut len = 0;
        for b in bits {
            assert!(len < MAX_BITS, "BitWord capacity is {MAX_BITS} bits");
            if b {
                words[len / 64] |= 1 << (len % 64);
            }
            len += 1;
        }
        BitWord { words, len }
    }

    /// Build from 0/1 digits, first digit = a₁.
    pub fn from_digits(digits: &[u8]) -> Self {
        Self::from_bits(digits.iter().map(|&d| d != 0))
    }

    /// Parse a string of `0`/`1` characters, leftmost = a₁.
    pub fn from_bit_str(s: &str) -> Self {
        Self::from_bits(s.chars().map(|c| c == '1'))
    }

    /// The word with bit i = f(i).
    pub fn from_fn(len: usize, f: impl Fn(usize) -> bool) -> Self {
        Self::from_bits((0..len).map(f))
    }

    /// Interpret `value` as the n-bit string a₁…a_n with a₁ the most
    /// significant bit, matching the hex convention and lexicographic order.
    pub fn from_uint(value: u64, len: usize) -> Self {
        assert!(len <= 64, "from_uint supports at most 64 bits");
        if len < 64 {
            assert!(value < (1u64 << len), "value out of range for {len} bits");
        }
        Self::from_fn(len, |i| (value >> (len - 1 - i)) & 1 == 1)
    }

    /// Inverse of [`BitWord::from_uint`].
    pub fn to_uint(&self) -> u64 {
        assert!(self.len <= 64, "to_uint supports at most 64 bits");
        let mut v = 0u64;
        for i in 0..self.len {
            if self.get(i) {
                v |= 1 << (self.len - 1 - i);
            }
        }
        v
    }

    /// Uniformly random word; consumes exactly `ceil(len/64)` draws from the
    /// stream so equal-seed prefixes agree regardless of how many words follow.
    pub fn random<R: rand::RngCore>(len: usize, rng: &mut R) -> Self {
        assert!(len <= MAX_BITS);
        let mut words = [0u64; WORDS];
        for (k, word) in words.iter_mut().enumerate().take(len.div_ceil(64)) {
            *word = rng.next_u64();
            let used = (len - 64 * k).min(64);
            if used < 64 {
                *word &= (1u64 << used) - 1;
            }
        }
        BitWord { words, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words == [0; WORDS]
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Number of set bits.
    #[inline]
    pub fn weight(&self) -> usize {
        (self.words[0].count_ones() + self.words[1].count_ones()) as usize
    }

    /// GF(2) inner product with `other` (parity of the AND).
    #[inline]
    pub fn dot(&self, other: &BitWord) -> bool {
        debug_assert_eq!(self.len, other.len);
        ((self.words[0] & other.words[0]).count_ones()
            + (self.words[1] & other.words[1]).count_ones())
            & 1
            == 1
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitWord) {
        debug_assert_eq!(self.len, other.len);
        self.words[0] ^= other.words[0];
        self.words[1] ^= other.words[1];
    }

    pub fn xor(&self, other: &BitWord) -> BitWord {
        let mut r = *self;
        r.xor_assign(other);
        r
    }

    /// Indices of the set bits, ascending.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// Cyclic right rotation by `k`: output bit (i+k) mod len = input bit i.
    pub fn rotate_right(&self, k: usize) -> BitWord {
        let n = self.len;
        if n == 0 {
            return *self;
        }
        Self::from_fn(n, |i| self.get((i + n - k % n) % n))
    }

    /// Cyclic left rotation by `k`.
    pub fn rotate_left(&self, k: usize) -> BitWord {
        let n = self.len;
        if n == 0 {
            return *self;
        }
        self.rotate_right(n - k % n)
    }

    /// Copy of bits [from, to) as a new word.
    pub fn slice(&self, from: usize, to: usize) -> BitWord {
        assert!(from <= to && to <= self.len);
        Self::from_fn(to - from, |i| self.get(from + i))
    }

    /// Concatenation self ++ other.
    pub fn concat(&self, other: &BitWord) -> BitWord {
        assert!(self.len + other.len <= MAX_BITS);
        Self::from_bits(
            (0..self.len)
                .map(|i| self.get(i))
                .chain((0..other.len).map(|i| other.get(i))),
        )
    }

    /// Mask with ones exactly on [from, to).
    pub fn range_mask(len: usize, from: usize, to: usize) -> BitWord {
        assert!(from <= to && to <= len);
        Self::from_fn(len, |i| i >= from && i < to)
    }

    /// Lowercase hex of the bit string read as a binary number with a₁ the
    /// most significant bit, left-padded with zeros to ceil(len/4) digits.
    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4).max(1);
        let mut v: u128 = 0;
        for i in 0..self.len {
            if self.get(i) {
                v |= 1u128 << (self.len - 1 - i);
            }
        }
        format!("{v:0digits$x}")
    }

    /// Parse the hex convention of [`BitWord::to_hex`]. Rejects wrong digit
    /// counts and values that would set bits beyond `len`.
    pub fn from_hex(s: &str, len: usize) -> Result<Self, Gf2Error> {
        assert!(len <= MAX_BITS, "BitWord capacity is {MAX_BITS} bits");
        let digits = len.div_ceil(4).max(1);
        if s.len() != digits {
            return Err(Gf2Error::BadHex {
                input: s.to_string(),
                len,
                reason: "wrong number of hex digits",
            });
        }
        let v = u128::from_str_radix(s, 16).map_err(|_| Gf2Error::BadHex {
            input: s.to_string(),
            len,
            reason: "invalid hex digit",
        })?;
        if len < 128 && v >> len != 0 {
            return Err(Gf2Error::BadHex {
                input: s.to_string(),
                len,
                reason: "value does not fit in len bits",
            });
        }
        Ok(Self::from_fn(len, |i| (v >> (len - 1 - i)) & 1 == 1))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({}/{})", self, self.len)
    }
}

impl std::ops::BitXor for &BitWord {
    type Output = BitWord;
    fn bitxor(self, rhs: &BitWord) -> BitWord {
        self.xor(rhs)
    }
}

impl std::ops::BitXorAssign<&BitWord> for BitWord {
    fn bitxor_assign(&mut self, rhs: &BitWord) {
        self.xor_assign(rhs);
    }
}

/// A binary matrix stored as packed rows of equal length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitWord>,
    ncols: usize,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        BitMatrix {
            rows: vec![BitWord::zeros(ncols); nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitWord>) -> Result<Self, Gf2Error> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Gf2Error::DimensionMismatch {
                op: "from_rows",
                left: format!("{ncols} cols"),
                right: "ragged row".into(),
            });
        }
        Ok(BitMatrix { rows, ncols })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &BitWord {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.rows[i].set(j, v);
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.ncols)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = Self::zeros(self.ncols, self.nrows());
        for i in 0..self.nrows() {
            for j in self.rows[i].ones_iter() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// GF(2) matrix product.
    pub fn mat_mul(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.ncols != other.nrows() {
            return Err(Gf2Error::DimensionMismatch {
                op: "mat_mul",
                left: format!("{}x{}", self.nrows(), self.ncols),
                right: format!("{}x{}", other.nrows(), other.ncols),
            });
        }
        Ok(self.mul_transpose(&other.transpose()))
    }

    /// `self * other^T` computed row-against-row, no transpose allocation.
    /// Requires equal column counts.
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.ncols, other.ncols, "mul_transpose column mismatch");
        let mut out = Self::zeros(self.nrows(), other.nrows());
        for i in 0..self.nrows() {
            for j in 0..other.nrows() {
                if self.rows[i].dot(&other.rows[j]) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Entrywise XOR.
    pub fn xor(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.nrows() != other.nrows() || self.ncols != other.ncols {
            return Err(Gf2Error::DimensionMismatch {
                op: "xor",
                left: format!("{}x{}", self.nrows(), self.ncols),
                right: format!("{}x{}", other.nrows(), other.ncols),
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.xor(b))
            .collect();
        Ok(BitMatrix { rows, ncols: self.ncols })
    }

    /// Row-wise concatenation [self | other].
    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.nrows() != other.nrows() {
            return Err(Gf2Error::DimensionMismatch {
                op: "hstack",
                left: format!("{} rows", self.nrows()),
                right: format!("{} rows", other.nrows()),
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(BitMatrix {
            rows,
            ncols: self.ncols + other.ncols,
        })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.nrows(), self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Circulant matrix: row i is `first_row` cyclically shifted `i` to the right.
pub fn circ(first_row: &BitWord) -> Result<BitMatrix, Gf2Error> {
    if first_row.is_empty() {
        return Err(Gf2Error::EmptyRow);
    }
    let n = first_row.len();
    let rows = (0..n).map(|i| first_row.rotate_right(i)).collect();
    Ok(BitMatrix { rows, ncols: n })
}

/// Reverse-circulant matrix: row i is `first_row` shifted `i` to the left.
/// Always symmetric.
pub fn rcirc(first_row: &BitWord) -> Result<BitMatrix, Gf2Error> {
    if first_row.is_empty() {
        return Err(Gf2Error::EmptyRow);
    }
    let n = first_row.len();
    let rows = (0..n).map(|i| first_row.rotate_left(i)).collect();
    Ok(BitMatrix { rows, ncols: n })
}

/// Block-circulant matrix CIRC(A₁,…,A_p): block-row i is the block sequence
/// cyclically shifted `i` blocks to the right. All blocks must be square with
/// the same dimension.
pub fn block_circ(blocks: &[BitMatrix]) -> Result<BitMatrix, Gf2Error> {
    if blocks.is_empty() {
        return Err(Gf2Error::RaggedBlocks);
    }
    let k = blocks[0].nrows();
    if blocks
        .iter()
        .any(|b| !b.is_square() || b.nrows() != k)
    {
        return Err(Gf2Error::RaggedBlocks);
    }
    let p = blocks.len();
    let mut rows = Vec::with_capacity(p * k);
    for bi in 0..p {
        for r in 0..k {
            let mut row = blocks[(p - bi) % p].row(r).slice(0, k);
            for bj in 1..p {
                row = row.concat(blocks[(p + bj - bi) % p].row(r));
            }
            rows.push(row);
        }
    }
    Ok(BitMatrix { rows, ncols: p * k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn w(s: &str) -> BitWord {
        BitWord::from_bit_str(s)
    }

    #[test]
    fn identity_times_identity() {
        let i3 = BitMatrix::identity(3);
        assert_eq!(i3.mat_mul(&i3).unwrap(), i3);
    }

    #[test]
    fn circ_0111_times_own_transpose_is_identity() {
        // Hand check: every row has odd weight 3 and all pairwise overlaps
        // are even, so the product is I₄.
        let c = circ(&w("0111")).unwrap();
        let p = c.mat_mul(&c.transpose()).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn times_identity_is_noop() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let m = BitMatrix::from_rows((0..5).map(|_| BitWord::random(5, &mut rng)).collect())
            .unwrap();
        assert_eq!(m.mat_mul(&BitMatrix::identity(5)).unwrap(), m);
        assert_eq!(BitMatrix::identity(5).mat_mul(&m).unwrap(), m);
    }

    #[test]
    fn mat_mul_rejects_mismatch() {
        let a = BitMatrix::zeros(2, 3);
        let b = BitMatrix::zeros(2, 3);
        assert!(a.mat_mul(&b).is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(BitMatrix::identity(4).transpose(), BitMatrix::identity(4));
        let rc = rcirc(&w("101")).unwrap();
        assert_eq!(rc.transpose(), rc);
        let ones = BitMatrix::from_rows(vec![w("111"), w("111")]).unwrap();
        let t = ones.transpose();
        assert_eq!((t.nrows(), t.ncols()), (3, 2));
        assert!(t.rows().iter().all(|r| r.weight() == 2));
    }

    #[test]
    fn circ_examples() {
        assert!(circ(&w("100")).unwrap().is_identity());
        let c = circ(&w("010")).unwrap();
        assert_eq!(c.row(0), &w("010"));
        assert_eq!(c.row(1), &w("001"));
        assert_eq!(c.row(2), &w("100"));
        let ones = circ(&w("111")).unwrap();
        assert!(ones.rows().iter().all(|r| r.weight() == 3));
        assert!(circ(&BitWord::zeros(0)).is_err());
    }

    #[test]
    fn rcirc_examples() {
        let r = rcirc(&w("100")).unwrap();
        assert_eq!(r.row(0), &w("100"));
        assert_eq!(r.row(1), &w("001"));
        assert_eq!(r.row(2), &w("010"));
        let ones = rcirc(&w("111")).unwrap();
        assert_eq!(ones, circ(&w("111")).unwrap());
        assert!(rcirc(&BitWord::zeros(0)).is_err());
    }

    #[test]
    fn block_circ_examples() {
        let i2 = BitMatrix::identity(2);
        assert_eq!(block_circ(&[i2.clone()]).unwrap(), i2);

        let a = circ(&w("10")).unwrap();
        let b = circ(&w("01")).unwrap();
        let m = block_circ(&[a.clone(), b.clone()]).unwrap();
        // [[A,B],[B,A]]
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.get(i, j), a.get(i, j));
                assert_eq!(m.get(i, 2 + j), b.get(i, j));
                assert_eq!(m.get(2 + i, j), b.get(i, j));
                assert_eq!(m.get(2 + i, 2 + j), a.get(i, j));
            }
        }

        // block-row 2 of CIRC(A,B,C) is (B,C,A)
        let c = circ(&w("11")).unwrap();
        let m3 = block_circ(&[a.clone(), b.clone(), c.clone()]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m3.get(4 + i, j), b.get(i, j));
                assert_eq!(m3.get(4 + i, 2 + j), c.get(i, j));
                assert_eq!(m3.get(4 + i, 4 + j), a.get(i, j));
            }
        }

        let ragged = [BitMatrix::identity(2), BitMatrix::identity(3)];
        assert!(block_circ(&ragged).is_err());
    }

    #[test]
    fn circ_equals_block_circ_of_unit_blocks() {
        let r = w("0110101");
        let blocks: Vec<BitMatrix> = (0..r.len())
            .map(|i| {
                let mut m = BitMatrix::zeros(1, 1);
                m.set(0, 0, r.get(i));
                m
            })
            .collect();
        assert_eq!(circ(&r).unwrap(), block_circ(&blocks).unwrap());
    }

    #[test]
    fn hex_convention() {
        // a₁ is the most significant bit; (1,0,0) -> 4
        assert_eq!(w("100").to_hex(), "4");
        assert_eq!(w("010").to_hex(), "2");
        assert_eq!(w("1111").to_hex(), "f");
        assert_eq!(w("10000").to_hex(), "10");
        assert_eq!(w("11001111001110010").to_hex(), "19e72");
        assert_eq!(BitWord::from_hex("4", 3).unwrap(), w("100"));
        // nonzero padding bit rejected: "f" = 1111 but len 3 pads last bit
        assert!(BitWord::from_hex("f", 3).is_err());
        assert!(BitWord::from_hex("zz", 8).is_err());
        assert!(BitWord::from_hex("123", 8).is_err());
    }

    #[test]
    fn uint_round_trip_is_lexicographic() {
        assert_eq!(BitWord::from_uint(4, 3), w("100"));
        assert_eq!(w("100").to_uint(), 4);
        assert_eq!(BitWord::from_uint(0, 4), w("0000"));
        for v in 0..32u64 {
            assert_eq!(BitWord::from_uint(v, 5).to_uint(), v);
        }
    }

    proptest! {
        #[test]
        fn transpose_of_product(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = BitMatrix::from_rows((0..4).map(|_| BitWord::random(6, &mut rng)).collect()).unwrap();
            let b = BitMatrix::from_rows((0..6).map(|_| BitWord::random(3, &mut rng)).collect()).unwrap();
            let left = a.mat_mul(&b).unwrap().transpose();
            let right = b.transpose().mat_mul(&a.transpose()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn rcirc_is_symmetric(bits in proptest::collection::vec(any::<bool>(), 1..20)) {
            let row = BitWord::from_bits(bits);
            let m = rcirc(&row).unwrap();
            prop_assert_eq!(m.transpose(), m);
        }

        #[test]
        fn circ_rows_have_equal_weight(bits in proptest::collection::vec(any::<bool>(), 1..20)) {
            let row = BitWord::from_bits(bits.clone());
            let m = circ(&row).unwrap();
            let t = m.transpose();
            for i in 0..m.nrows() {
                prop_assert_eq!(m.row(i).weight(), row.weight());
                prop_assert_eq!(t.row(i).weight(), row.weight());
            }
        }

        #[test]
        fn hex_round_trip(bits in proptest::collection::vec(any::<bool>(), 1..=128)) {
            let word = BitWord::from_bits(bits);
            let hex = word.to_hex();
            prop_assert_eq!(hex.len(), word.len().div_ceil(4));
            prop_assert_eq!(BitWord::from_hex(&hex, word.len()).unwrap(), word);
        }

        #[test]
        fn double_transpose(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = BitMatrix::from_rows((0..5).map(|_| BitWord::random(9, &mut rng)).collect()).unwrap();
            prop_assert_eq!(m.transpose().transpose(), m);
        }

        #[test]
        fn rotation_round_trip(bits in proptest::collection::vec(any::<bool>(), 1..40), k in 0usize..80) {
            let word = BitWord::from_bits(bits);
            prop_assert_eq!(word.rotate_right(k).rotate_left(k), word);
        }
    }
}
