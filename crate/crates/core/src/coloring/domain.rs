use crate::algebra::Element;

/// A set of candidate colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) struct Domain {
    words: Vec<u64>,
}

impl Domain {
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            *words.last_mut().expect("n > 0") = (1u64 << (n % 64)) - 1;
        }
        Domain { words }
    }

    pub fn empty(n: usize) -> Self {
        Domain {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn single(n: usize, x: Element) -> Self {
        let mut d = Domain::empty(n);
        d.insert(x);
        d
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: Element) {
        self.words[x / 64] |= 1 << (x % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Intersects in place; returns true iff the set shrank.
    pub fn intersect(&mut self, other: &Domain) -> bool {
        let mut changed = false;
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            let next = *w & o;
            changed |= next != *w;
            *w = next;
        }
        changed
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| 64 * i + b))
    }

    pub fn first(&self) -> Option<Element> {
        self.iter().next()
    }
}
