use std::fmt;

/// Subset of the states of an [`OutcomeSpace`](super::OutcomeSpace),
/// stored as a bitset over state indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Event {
    len: usize,
    words: Vec<u64>,
}

impl Event {
    pub fn empty(len: usize) -> Self {
        Event {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut e = Event::empty(len);
        for i in 0..len {
            e.insert(i);
        }
        e
    }

    pub fn from_fn<F: FnMut(usize) -> bool>(len: usize, mut f: F) -> Self {
        let mut e = Event::empty(len);
        for i in 0..len {
            if f(i) {
                e.insert(i);
            }
        }
        e
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut e = Event::empty(len);
        for i in indices {
            e.insert(i);
        }
        e
    }

    /// Number of states in the underlying space.
    pub fn universe_len(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "state index {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    fn check_same_universe(&self, other: &Event) {
        assert_eq!(
            self.len, other.len,
            "events over different outcome spaces"
        );
    }

    pub fn union(&self, other: &Event) -> Event {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Event) -> Event {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Event) -> Event {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Event {
        Event::full(self.len).difference(self)
    }

    pub fn is_subset(&self, other: &Event) -> bool {
        self.check_same_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    fn zip_with(&self, other: &Event, op: impl Fn(u64, u64) -> u64) -> Event {
        self.check_same_universe(other);
        Event {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
