//! Bitmask vertex sets over the ground set `{1, ..., 128}`.
//!
//! Vertex `v` occupies bit `v - 1`. Sets are ordered lexicographically by
//! their sorted element lists, so `{1,2} < {1,2,3} < {1,3} < {2}`.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set this crate can represent.
pub const MAX_VERTICES: usize = 128;

/// A vertex id in `1..=n`.
pub type VertexId = usize;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The set `{1, ..., n}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    /// The set `{from, ..., to}` (empty when `from > to`).
    pub fn range(from: VertexId, to: VertexId) -> Self {
        if from > to {
            return Self::EMPTY;
        }
        VertexSet(Self::full(to).0 & !Self::full(from - 1).0)
    }

    #[inline]
    pub fn singleton(v: VertexId) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u128 << (v - 1))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        self.0 |= Self::singleton(v).0;
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !Self::singleton(v).0;
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn min(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest element, if any.
    #[inline]
    pub fn max(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 128 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Maps every element through `f`.
    pub fn map(self, mut f: impl FnMut(VertexId) -> VertexId) -> Self {
        self.iter().map(&mut f).collect()
    }

    /// All subsets of `self` of size exactly `k`, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        let elems = self.to_vec();
        Combinations::new(elems.len(), k)
            .map(move |idx| idx.iter().map(|&i| elems[i]).collect())
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a VertexId>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // Both share every element below `d`, the least element of the
        // symmetric difference. The side holding `d` is smaller unless the
        // other side has run out of elements (it is then a proper prefix).
        let diff = self.0 ^ other.0;
        let d = diff.trailing_zeros();
        let above = if d == 127 { 0 } else { !0u128 << (d + 1) };
        let (holder, rest) = if self.0 >> d & 1 == 1 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        if rest & above != 0 {
            holder
        } else {
            holder.reverse()
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Lexicographic k-combinations of `0..n` as index vectors.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    VertexSet::full(n).subsets_of_size(k)
}

/// Binomial coefficient with `C(a, b) = 0` for `b < 0` or `a < b`, and
/// `C(a, 0) = 1` for `a >= 0`. Panics on overflow of `u128`.
pub fn binom(a: i64, b: i64) -> u128 {
    checked_binom(a, b).expect("binomial coefficient overflows u128")
}

pub fn checked_binom(a: i64, b: i64) -> Option<u128> {
    if b < 0 || a < b {
        return Some(0);
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for i in 0..b {
        // acc * (a - i) / (i + 1) is exact; divide out the common factor
        // first so the product stays in range whenever the result does.
        let g = gcd(acc, i + 1);
        acc = (acc / g).checked_mul((a - i) / ((i + 1) / g))?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Serialized as the sorted list of its elements.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
