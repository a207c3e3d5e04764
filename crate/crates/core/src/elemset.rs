//! Bitsets over the carrier of a finite Boolean algebra.
//!
//! Element `x` of an `n`-atom algebra is the atom mask `x < 2^n`; an
//! [`ElemSet`] stores one bit per element. Up to six atoms the whole set
//! fits in a single inline word, which is where all exhaustive work happens.

use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

/// Positions whose index has bit `i` clear, for `i < 6`.
const LOW: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    n_atoms: u8,
    words: SmallVec<[u64; 1]>,
}

fn word_count(n_atoms: usize) -> usize {
    if n_atoms <= 6 {
        1
    } else {
        1 << (n_atoms - 6)
    }
}

impl ElemSet {
    pub fn empty(n_atoms: usize) -> Self {
        Self {
            n_atoms: n_atoms as u8,
            words: smallvec![0; word_count(n_atoms)],
        }
    }

    pub fn full(n_atoms: usize) -> Self {
        let mut s = Self::empty(n_atoms);
        if n_atoms < 6 {
            s.words[0] = (1u64 << (1u32 << n_atoms)) - 1;
        } else {
            s.words.iter_mut().for_each(|w| *w = u64::MAX);
        }
        s
    }

    pub fn from_masks(n_atoms: usize, masks: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::empty(n_atoms);
        for m in masks {
            s.insert(m);
        }
        s
    }

    /// The single-word encoding; `None` once the carrier exceeds 64 elements.
    pub fn code(&self) -> Option<u64> {
        (self.n_atoms <= 6).then(|| self.words[0])
    }

    pub fn from_code(n_atoms: usize, code: u64) -> Self {
        debug_assert!(n_atoms <= 6);
        let mut s = Self::empty(n_atoms);
        s.words[0] = code;
        s
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms as usize
    }

    pub fn carrier_len(&self) -> usize {
        1 << self.n_atoms
    }

    pub fn contains(&self, x: u32) -> bool {
        let x = x as usize;
        x < self.carrier_len() && self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    pub fn insert(&mut self, x: u32) -> bool {
        let x = x as usize;
        assert!(x < self.carrier_len(), "element {x} outside carrier");
        let w = &mut self.words[x >> 6];
        let before = *w;
        *w |= 1 << (x & 63);
        before != *w
    }

    pub fn remove(&mut self, x: u32) -> bool {
        let x = x as usize;
        if x >= self.carrier_len() {
            return false;
        }
        let w = &mut self.words[x >> 6];
        let before = *w;
        *w &= !(1 << (x & 63));
        before != *w
    }

    pub fn with(&self, x: u32) -> Self {
        let mut s = self.clone();
        s.insert(x);
        s
    }

    pub fn without(&self, x: u32) -> Self {
        let mut s = self.clone();
        s.remove(x);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending mask order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = (i as u32) << 6;
            BitIter(w).map(move |b| base + b)
        })
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.n_atoms, other.n_atoms);
        Self {
            n_atoms: self.n_atoms,
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        ElemSet::full(self.n_atoms()).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n_atoms, other.n_atoms);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(&a, &b)| a & b != 0)
    }

    /// `{ x | 2^i : x in self, bit i clear in x }`
    fn shift_up(&self, i: usize) -> Self {
        let mut out = Self::empty(self.n_atoms());
        if i < 6 {
            for (o, &w) in out.words.iter_mut().zip(self.words.iter()) {
                *o = (w & LOW[i]) << (1 << i);
            }
        } else {
            let step = 1 << (i - 6);
            for j in 0..self.words.len() {
                if j & step == 0 {
                    out.words[j | step] = self.words[j];
                }
            }
        }
        out
    }

    pub fn up_closure(&self) -> Self {
        let mut s = self.clone();
        for i in 0..self.n_atoms() {
            if i < 6 {
                for w in s.words.iter_mut() {
                    *w |= (*w & LOW[i]) << (1 << i);
                }
            } else {
                let step = 1 << (i - 6);
                for j in 0..s.words.len() {
                    if j & step == 0 {
                        let lo = s.words[j];
                        s.words[j | step] |= lo;
                    }
                }
            }
        }
        s
    }

    pub fn down_closure(&self) -> Self {
        let mut s = self.clone();
        for i in 0..self.n_atoms() {
            if i < 6 {
                for w in s.words.iter_mut() {
                    *w |= (*w & !LOW[i]) >> (1 << i);
                }
            } else {
                let step = 1 << (i - 6);
                for j in 0..s.words.len() {
                    if j & step == 0 {
                        let hi = s.words[j | step];
                        s.words[j] |= hi;
                    }
                }
            }
        }
        s
    }

    pub fn is_up_closed(&self) -> bool {
        self.up_closure() == *self
    }

    /// Members with no strictly smaller member.
    pub fn minimal(&self) -> Self {
        let mut strictly_above = Self::empty(self.n_atoms());
        for i in 0..self.n_atoms() {
            strictly_above = strictly_above.union(&self.shift_up(i));
        }
        self.difference(&strictly_above.up_closure())
    }

    /// `{ x - 2^i : x in self, bit i set in x }`
    fn shift_down(&self, i: usize) -> Self {
        let mut out = Self::empty(self.n_atoms());
        if i < 6 {
            for (o, &w) in out.words.iter_mut().zip(self.words.iter()) {
                *o = (w & !LOW[i]) >> (1 << i);
            }
        } else {
            let step = 1 << (i - 6);
            for j in 0..self.words.len() {
                if j & step != 0 {
                    out.words[j & !step] = self.words[j];
                }
            }
        }
        out
    }

    /// Members with no strictly larger member.
    pub fn maximal(&self) -> Self {
        let mut strictly_below = Self::empty(self.n_atoms());
        for i in 0..self.n_atoms() {
            strictly_below = strictly_below.union(&self.shift_down(i));
        }
        self.difference(&strictly_below.down_closure())
    }

    /// Meet of all members; the top element for the empty set.
    pub fn meet_all(&self) -> u32 {
        let top = (1u32 << self.n_atoms) - 1;
        self.iter().fold(top, |acc, x| acc & x)
    }

    pub fn join_all(&self) -> u32 {
        self.iter().fold(0, |acc, x| acc | x)
    }
}

impl Ord for ElemSet {
    /// Numeric order of the bitset, after the atom count.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n_atoms
            .cmp(&other.n_atoms)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_up(s: &ElemSet) -> ElemSet {
        let n = s.n_atoms();
        let mut out = ElemSet::empty(n);
        for y in 0..(1u32 << n) {
            if s.iter().any(|x| x & y == x) {
                out.insert(y);
            }
        }
        out
    }

    #[test]
    fn closures_match_naive_definition() {
        for n in [1usize, 3, 7] {
            let s = ElemSet::from_masks(n, [1u32, 6, (1 << n) - 2].into_iter().filter(|&m| m < 1 << n));
            assert_eq!(s.up_closure(), naive_up(&s), "n = {n}");
            let down = s.down_closure();
            for y in 0..(1u32 << n) {
                assert_eq!(down.contains(y), s.iter().any(|x| y & x == y));
            }
        }
    }

    #[test]
    fn minimal_elements() {
        let s = ElemSet::from_masks(3, [1, 3, 5, 6, 7]);
        assert_eq!(s.minimal().iter().collect::<Vec<_>>(), vec![1, 6]);
        let big = ElemSet::from_masks(8, [0b11, 0b1000_0001, 0b1000_0000]);
        assert_eq!(big.up_closure().minimal(), big.minimal());
        assert_eq!(big.minimal().iter().collect::<Vec<_>>(), vec![0b11, 0b1000_0000]);
        assert_eq!(big.maximal().iter().collect::<Vec<_>>(), vec![0b11, 0b1000_0001]);
        assert_eq!(s.maximal().iter().collect::<Vec<_>>(), vec![7]);
    }

    #[test]
    fn full_and_complement() {
        assert_eq!(ElemSet::full(2).len(), 4);
        assert_eq!(ElemSet::full(6).len(), 64);
        assert_eq!(ElemSet::full(8).len(), 256);
        let s = ElemSet::from_masks(3, [0, 7]);
        assert_eq!(s.complement().len(), 6);
        assert!(!s.complement().contains(7));
    }

    #[test]
    fn order_is_numeric() {
        let a = ElemSet::from_code(3, 0b10);
        let b = ElemSet::from_code(3, 0b01);
        assert!(b < a);
    }
}
