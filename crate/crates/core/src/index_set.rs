use std::fmt;

/// A subset of `{1, ..., 64}` stored as a bit mask (bit `i - 1` for element `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IndexSet(u64);

pub const MAX_ELEMENT: usize = 64;

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENT);
        IndexSet(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn singleton(i: usize) -> Self {
        Self::EMPTY.with(i)
    }

    pub fn with(self, i: usize) -> Self {
        assert!((1..=MAX_ELEMENT).contains(&i), "index {i} out of range");
        IndexSet(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        assert!((1..=MAX_ELEMENT).contains(&i), "index {i} out of range");
        IndexSet(self.0 & !(1 << (i - 1)))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_ELEMENT).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    /// Complement inside `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Number of elements strictly smaller than `i`.
    pub fn rank_of(self, i: usize) -> usize {
        (self.0 & ((1u64 << (i - 1)) - 1)).count_ones() as usize
    }

    pub fn iter(self) -> impl DoubleEndedIterator<Item = usize> + Clone {
        (1..=MAX_ELEMENT).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` (including the empty set and `self`).
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some(((c | !full).wrapping_add(1)) & full) };
            Some(IndexSet(c))
        })
    }

    /// All subsets of `{1, ..., n}` of size `k`, in increasing bit order.
    pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = IndexSet> {
        IndexSet::full(n).subsets().filter(move |s| s.len() == k)
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(IndexSet::EMPTY, IndexSet::with)
    }
}

impl From<&[usize]> for IndexSet {
    fn from(xs: &[usize]) -> Self {
        xs.iter().copied().collect()
    }
}

impl<const N: usize> From<[usize; N]> for IndexSet {
    fn from(xs: [usize; N]) -> Self {
        xs.into_iter().collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
