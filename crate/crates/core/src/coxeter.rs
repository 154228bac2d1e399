//! Group elements, generator words, reflecting hyperplanes, and the
//! crossing sequences that connect them.
//!
//! Elements are stored in one-line notation. Appending a generator to a
//! word acts on positions: `s_i` with `i >= 1` swaps the entries in
//! positions `i` and `i+1`, and `s_0` (type B only) negates the entry in
//! position 1. Each generator application crosses exactly one reflecting
//! hyperplane, so every word traces a walk through chambers; for a reduced
//! word the crossed hyperplanes are pairwise distinct and form the
//! inversion set of the product.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported rank; word letters are stored as bytes.
pub const MAX_RANK: usize = 255;

/// The two families of groups this crate works with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Symmetric group on `n` letters; generators `s_1 .. s_{n-1}` are the
    /// adjacent transpositions.
    TypeA,
    /// Signed permutations of `n` letters; `s_0` flips the sign in position
    /// 1 and `s_1 .. s_{n-1}` are the adjacent transpositions.
    TypeB,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::TypeA => write!(f, "A"),
            Family::TypeB => write!(f, "B"),
        }
    }
}

/// A family together with its rank parameter `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    family: Family,
    n: usize,
}

impl GroupSpec {
    /// A group of the given family on `n` letters.
    ///
    /// Type A needs `n >= 2` (one letter admits no generator); type B needs
    /// `n >= 1`. Ranks above [`MAX_RANK`] are rejected.
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::TypeA => 2,
            Family::TypeB => 1,
        };
        if n < min {
            return Err(Error::InvalidSpec {
                reason: format!("type {family} needs n >= {min}, got {n}"),
            });
        }
        if n > MAX_RANK {
            return Err(Error::InvalidSpec {
                reason: format!("n = {n} exceeds the supported maximum {MAX_RANK}"),
            });
        }
        Ok(GroupSpec { family, n })
    }

    /// The symmetric group on `n` letters.
    pub fn type_a(n: usize) -> Result<Self> {
        Self::new(Family::TypeA, n)
    }

    /// The signed permutations of `n` letters.
    pub fn type_b(n: usize) -> Result<Self> {
        Self::new(Family::TypeB, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Smallest generator index: 1 in type A, 0 in type B.
    pub fn min_generator(&self) -> u8 {
        match self.family {
            Family::TypeA => 1,
            Family::TypeB => 0,
        }
    }

    /// Largest generator index, always `n - 1`.
    pub fn max_generator(&self) -> u8 {
        (self.n - 1) as u8
    }

    /// All generator indices, ascending.
    pub fn generators(&self) -> impl Iterator<Item = u8> {
        self.min_generator()..=self.max_generator()
    }

    /// True when `letter` indexes a generator of this group.
    pub fn has_generator(&self, letter: usize) -> bool {
        letter >= self.min_generator() as usize && letter <= self.max_generator() as usize
    }

    /// Number of reflecting hyperplanes: `n(n-1)/2` in type A, `n^2` in
    /// type B.
    pub fn hyperplane_count(&self) -> usize {
        let pairs = self.n * (self.n - 1) / 2;
        match self.family {
            Family::TypeA => pairs,
            Family::TypeB => self.n + 2 * pairs,
        }
    }

    /// All reflecting hyperplanes in canonical (sorted) order.
    pub fn hyperplanes(&self) -> Vec<Hyperplane> {
        let n = self.n as u16;
        let mut out = Vec::with_capacity(self.hyperplane_count());
        if self.family == Family::TypeB {
            for i in 1..=n {
                out.push(Hyperplane::Zero { i });
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Hyperplane::Plus { i, j });
            }
        }
        if self.family == Family::TypeB {
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push(Hyperplane::Minus { i, j });
                }
            }
        }
        out
    }

    /// Dense index of a hyperplane, a bijection onto
    /// `0..hyperplane_count()`. Used for position tables; unrelated to the
    /// sort order of [`GroupSpec::hyperplanes`].
    pub fn hyperplane_id(&self, h: Hyperplane) -> usize {
        let n = self.n;
        let pair = |i: u16, j: u16| -> usize {
            let (i, j) = (i as usize, j as usize);
            (j - 1) * (j - 2) / 2 + (i - 1)
        };
        match (self.family, h) {
            (Family::TypeA, Hyperplane::Plus { i, j }) => pair(i, j),
            (Family::TypeB, Hyperplane::Zero { i }) => i as usize - 1,
            (Family::TypeB, Hyperplane::Plus { i, j }) => n + pair(i, j),
            (Family::TypeB, Hyperplane::Minus { i, j }) => n + n * (n - 1) / 2 + pair(i, j),
            _ => panic!("hyperplane {h:?} does not belong to type {}", self.family),
        }
    }

    /// The identity element.
    pub fn identity(&self) -> Element {
        let images = (1..=self.n as i32).collect();
        Element { spec: *self, images }
    }

    /// The longest element: the order-reversing permutation in type A, the
    /// sign-flip of every letter in type B.
    pub fn longest_element(&self) -> Element {
        let images = match self.family {
            Family::TypeA => (1..=self.n as i32).rev().collect(),
            Family::TypeB => (1..=self.n as i32).map(|v| -v).collect(),
        };
        Element { spec: *self, images }
    }

    /// Group order when it fits in a `u64`: `n!` in type A, `2^n n!` in
    /// type B.
    pub fn checked_order(&self) -> Option<u64> {
        let mut order: u64 = 1;
        for k in 1..=self.n as u64 {
            order = order.checked_mul(k)?;
            if self.family == Family::TypeB {
                order = order.checked_mul(2)?;
            }
        }
        Some(order)
    }

    /// Every group element, sorted. Intended for small ranks; the list has
    /// `checked_order()` entries.
    pub fn elements(&self) -> Vec<Element> {
        let n = self.n;
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        loop {
            match self.family {
                Family::TypeA => out.push(Element { spec: *self, images: perm.clone() }),
                Family::TypeB => {
                    for mask in 0u64..(1u64 << n) {
                        let images = perm
                            .iter()
                            .enumerate()
                            .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                            .collect();
                        out.push(Element { spec: *self, images });
                    }
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.n)
    }
}

/// Advance a slice to its lexicographic successor; false at the last one.
fn next_permutation(a: &mut [i32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// A reflecting hyperplane, named by its defining equation.
///
/// Type A only uses [`Hyperplane::Plus`]; type B uses all three kinds.
/// Coordinates are 1-based and pair variants keep `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hyperplane {
    /// The wall `x_i = 0`.
    Zero { i: u16 },
    /// The wall `x_i = x_j` with `i < j`.
    Plus { i: u16, j: u16 },
    /// The wall `x_i = -x_j` with `i < j`.
    Minus { i: u16, j: u16 },
}

impl Hyperplane {
    /// The wall `x_i = x_j`, coordinates given in either order.
    pub fn plus(i: u16, j: u16) -> Self {
        assert!(i != j && i > 0 && j > 0, "need two distinct positive coordinates");
        Hyperplane::Plus { i: i.min(j), j: i.max(j) }
    }

    /// The wall `x_i = -x_j`, coordinates given in either order.
    pub fn minus(i: u16, j: u16) -> Self {
        assert!(i != j && i > 0 && j > 0, "need two distinct positive coordinates");
        Hyperplane::Minus { i: i.min(j), j: i.max(j) }
    }

    /// The wall `x_i = 0`.
    pub fn zero(i: u16) -> Self {
        assert!(i > 0, "coordinates are 1-based");
        Hyperplane::Zero { i }
    }

    /// Coordinates appearing in the defining equation, ascending.
    pub fn support(&self) -> (u16, Option<u16>) {
        match *self {
            Hyperplane::Zero { i } => (i, None),
            Hyperplane::Plus { i, j } | Hyperplane::Minus { i, j } => (i, Some(j)),
        }
    }

    /// Largest coordinate in the defining equation.
    pub fn max_coordinate(&self) -> u16 {
        match *self {
            Hyperplane::Zero { i } => i,
            Hyperplane::Plus { j, .. } | Hyperplane::Minus { j, .. } => j,
        }
    }

    /// Display name. Type A walls print as `H_{ij}` (comma-separated
    /// coordinates past 9); type B walls print their defining equation.
    pub fn name(&self, family: Family) -> String {
        match (family, *self) {
            (Family::TypeA, Hyperplane::Plus { i, j }) => {
                if j <= 9 {
                    format!("H_{{{i}{j}}}")
                } else {
                    format!("H_{{{i},{j}}}")
                }
            }
            (_, Hyperplane::Zero { i }) => format!("x{i}=0"),
            (_, Hyperplane::Plus { i, j }) => format!("x{i}=x{j}"),
            (_, Hyperplane::Minus { i, j }) => format!("x{i}=-x{j}"),
        }
    }
}

/// Positions and signs of the letters in an element's one-line notation,
/// precomputed so that hyperplane membership tests are O(1).
pub(crate) struct PositionTable {
    /// `pos[v]` is the 1-based position of the entry with absolute value `v`.
    pos: Vec<u16>,
    /// `neg[v]` is true when the entry with absolute value `v` is negative.
    neg: Vec<bool>,
}

impl PositionTable {
    fn new(w: &Element) -> Self {
        let n = w.spec.n;
        let mut pos = vec![0u16; n + 1];
        let mut neg = vec![false; n + 1];
        for (k, &v) in w.images.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            pos[a] = (k + 1) as u16;
            neg[a] = v < 0;
        }
        PositionTable { pos, neg }
    }

    /// True when the hyperplane separates the chamber of this element from
    /// the base chamber, i.e. lies in the element's inversion set.
    pub(crate) fn separates(&self, h: Hyperplane) -> bool {
        match h {
            Hyperplane::Zero { i } => self.neg[i as usize],
            Hyperplane::Plus { i, j } => {
                let (i, j) = (i as usize, j as usize);
                match (self.neg[i], self.neg[j]) {
                    (false, false) => self.pos[j] < self.pos[i],
                    (false, true) => true,
                    (true, false) => false,
                    (true, true) => self.pos[i] < self.pos[j],
                }
            }
            Hyperplane::Minus { i, j } => {
                let (i, j) = (i as usize, j as usize);
                match (self.neg[i], self.neg[j]) {
                    (false, false) => false,
                    (true, true) => true,
                    (false, true) => self.pos[i] < self.pos[j],
                    (true, false) => self.pos[j] < self.pos[i],
                }
            }
        }
    }
}

/// A group element in one-line notation.
///
/// Type A stores a permutation of `1..=n`; type B stores a signed
/// permutation, where the absolute values are a permutation of `1..=n` and
/// each entry carries a sign.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    spec: GroupSpec,
    images: Vec<i32>,
}

impl Element {
    /// An element from one-line notation, validated against the spec.
    pub fn new(spec: GroupSpec, images: Vec<i32>) -> Result<Self> {
        let n = spec.n();
        if images.len() != n {
            return Err(Error::InvalidElement {
                reason: format!("expected {n} entries, got {}", images.len()),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if spec.family() == Family::TypeA && v < 0 {
                return Err(Error::InvalidElement {
                    reason: format!("type A entries must be positive, got {v}"),
                });
            }
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidElement {
                    reason: format!("entry {v} outside 1..={n} in absolute value"),
                });
            }
            if seen[a] {
                return Err(Error::InvalidElement {
                    reason: format!("absolute value {a} appears twice"),
                });
            }
            seen[a] = true;
        }
        Ok(Element { spec, images })
    }

    /// Parse one-line notation, or the keyword `w0` for the longest
    /// element. Type A accepts a digit string (`"3412"`) or a
    /// comma-separated list; type B wants a comma-separated signed list
    /// (`"-3,-2,-1"`).
    pub fn parse(spec: GroupSpec, s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "w0" {
            return Ok(spec.longest_element());
        }
        if t.is_empty() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "empty element".to_string(),
            });
        }
        let mut entries = Vec::new();
        let tokens: Vec<&str> = t.split(',').collect();
        if tokens.len() == 1 && t.len() > 1 && t.bytes().all(|b| b.is_ascii_digit()) {
            for b in t.bytes() {
                entries.push((b - b'0') as i32);
            }
        } else {
            for tok in tokens {
                let v = tok.trim().parse::<i32>().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: format!("bad entry {tok:?}"),
                })?;
                entries.push(v);
            }
        }
        Element::new(spec, entries)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    /// One-line notation: entry `k` (0-based) is the image of `k+1`.
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k as i32 + 1)
    }

    /// Signed image of `v`, where `v` may be negative; `w(-v) = -w(v)`.
    pub fn image_of(&self, v: i32) -> i32 {
        let a = v.unsigned_abs() as usize;
        assert!(a >= 1 && a <= self.spec.n(), "value {v} outside the domain");
        let img = self.images[a - 1];
        if v < 0 {
            -img
        } else {
            img
        }
    }

    /// Right multiplication by one generator. `s_i` with `i >= 1` swaps
    /// positions `i` and `i+1`; `s_0` negates position 1.
    ///
    /// # Panics
    /// Panics when `letter` is not a generator of the group; build words
    /// through [`Word::new`] to get a checked error instead.
    pub fn right_mul(&self, letter: u8) -> Element {
        assert!(
            self.spec.has_generator(letter as usize),
            "letter {letter} is not a generator of {}",
            self.spec
        );
        let mut images = self.images.clone();
        if letter == 0 {
            images[0] = -images[0];
        } else {
            images.swap(letter as usize - 1, letter as usize);
        }
        Element { spec: self.spec, images }
    }

    /// Group product `self * other` (apply `other` first, then `self` as
    /// functions on values).
    pub fn compose(&self, other: &Element) -> Element {
        assert_eq!(self.spec, other.spec, "elements from different groups");
        let images = other.images.iter().map(|&v| self.image_of(v)).collect();
        Element { spec: self.spec, images }
    }

    /// Group inverse.
    pub fn inverse(&self) -> Element {
        let n = self.spec.n();
        let mut images = vec![0i32; n];
        for (k, &v) in self.images.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            images[a - 1] = if v < 0 { -(k as i32 + 1) } else { k as i32 + 1 };
        }
        Element { spec: self.spec, images }
    }

    pub(crate) fn position_table(&self) -> PositionTable {
        PositionTable::new(self)
    }

    /// True when the hyperplane lies in this element's inversion set.
    pub fn inverts(&self, h: Hyperplane) -> bool {
        self.position_table().separates(h)
    }

    /// Coxeter length: the number of hyperplanes separating this element's
    /// chamber from the base chamber.
    pub fn length(&self) -> usize {
        let table = self.position_table();
        self.spec
            .hyperplanes()
            .into_iter()
            .filter(|&h| table.separates(h))
            .count()
    }

    /// The separating hyperplanes themselves, sorted.
    pub fn inversion_set(&self) -> BTreeSet<Hyperplane> {
        let table = self.position_table();
        self.spec
            .hyperplanes()
            .into_iter()
            .filter(|&h| table.separates(h))
            .collect()
    }

    /// Generators whose right multiplication shortens the element,
    /// ascending. `s_i` with `i >= 1` is a descent when the entries in
    /// positions `i` and `i+1` are out of order; `s_0` is a descent when
    /// the entry in position 1 is negative.
    pub fn right_descents(&self) -> Vec<u8> {
        let mut out = Vec::new();
        if self.spec.family() == Family::TypeB && self.images[0] < 0 {
            out.push(0);
        }
        for i in 1..self.spec.n() {
            if self.images[i - 1] > self.images[i] {
                out.push(i as u8);
            }
        }
        out
    }

    /// Hyperplane crossed between this element's chamber and the chamber of
    /// `self * s_letter`.
    ///
    /// # Panics
    /// Panics when `letter` is not a generator of the group.
    pub fn wall(&self, letter: u8) -> Hyperplane {
        assert!(
            self.spec.has_generator(letter as usize),
            "letter {letter} is not a generator of {}",
            self.spec
        );
        if letter == 0 {
            return Hyperplane::zero(self.images[0].unsigned_abs() as u16);
        }
        let a = self.images[letter as usize - 1];
        let b = self.images[letter as usize];
        let (pa, pb) = (a.unsigned_abs() as u16, b.unsigned_abs() as u16);
        if self.spec.family() == Family::TypeA || (a < 0) == (b < 0) {
            Hyperplane::plus(pa, pb)
        } else {
            Hyperplane::minus(pa, pb)
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.spec.family() {
            Family::TypeA if self.spec.n() <= 9 => {
                for &v in &self.images {
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            _ => {
                for (k, &v) in self.images.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// A word in the generators: a finite sequence of generator indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    spec: GroupSpec,
    letters: Vec<u8>,
}

impl Word {
    /// A word from generator indices, each validated against the spec.
    pub fn new(spec: GroupSpec, letters: &[u8]) -> Result<Self> {
        for &l in letters {
            if !spec.has_generator(l as usize) {
                return Err(Error::LetterOutOfRange {
                    letter: l as usize,
                    min: spec.min_generator() as usize,
                    max: spec.max_generator() as usize,
                });
            }
        }
        Ok(Word { spec, letters: letters.to_vec() })
    }

    /// The empty word (a product evaluating to the identity).
    pub fn empty(spec: GroupSpec) -> Self {
        Word { spec, letters: Vec::new() }
    }

    /// Parse a word: either a digit string (`"121321"`, letters up to 9) or
    /// a comma-separated index list (`"1,2,1,3,2,1"`). Both forms are
    /// accepted regardless of rank; the empty string is the empty word.
    pub fn parse(spec: GroupSpec, s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Word::empty(spec));
        }
        let mut letters = Vec::new();
        if t.contains(',') {
            for tok in t.split(',') {
                let l = tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: format!("bad letter {tok:?}"),
                })?;
                if !spec.has_generator(l) {
                    return Err(Error::LetterOutOfRange {
                        letter: l,
                        min: spec.min_generator() as usize,
                        max: spec.max_generator() as usize,
                    });
                }
                letters.push(l as u8);
            }
        } else {
            for b in t.bytes() {
                if !b.is_ascii_digit() {
                    return Err(Error::Parse {
                        input: s.to_string(),
                        reason: format!("unexpected character {:?}", b as char),
                    });
                }
                let l = (b - b'0') as usize;
                if !spec.has_generator(l) {
                    return Err(Error::LetterOutOfRange {
                        letter: l,
                        min: spec.min_generator() as usize,
                        max: spec.max_generator() as usize,
                    });
                }
                letters.push(l as u8);
            }
        }
        Ok(Word { spec, letters })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group element this word multiplies out to.
    pub fn evaluate(&self) -> Element {
        let mut w = self.spec.identity();
        for &l in &self.letters {
            w = w.right_mul(l);
        }
        w
    }

    /// True when no shorter word evaluates to the same element, i.e. the
    /// word's length equals the Coxeter length of its product.
    pub fn is_reduced(&self) -> bool {
        self.crossing_sequence().is_ok()
    }

    /// The hyperplanes crossed by the chamber walk of this word, in walk
    /// order. A word is reduced exactly when these are pairwise distinct,
    /// so a repeat is reported as [`Error::NotReduced`].
    pub fn crossing_sequence(&self) -> Result<CrossingSequence> {
        let mut w = self.spec.identity();
        let mut crossings = Vec::with_capacity(self.letters.len());
        let mut seen = BTreeSet::new();
        for &l in &self.letters {
            let h = w.wall(l);
            if !seen.insert(h) {
                return Err(Error::NotReduced { word: self.to_string() });
            }
            crossings.push(h);
            w = w.right_mul(l);
        }
        Ok(CrossingSequence { word: self.clone(), crossings })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&l| l <= 9) {
            for &l in &self.letters {
                write!(f, "{l}")?;
            }
        } else {
            for (k, &l) in self.letters.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

/// The ordered list of hyperplanes crossed by a reduced word's chamber
/// walk. The underlying set is the inversion set of the product; the order
/// is what distinguishes different reduced words of the same element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingSequence {
    word: Word,
    crossings: Vec<Hyperplane>,
}

impl CrossingSequence {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn crossings(&self) -> &[Hyperplane] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Walk positions indexed by dense hyperplane id: entry
    /// `hyperplane_id(h)` holds the 0-based step at which `h` is crossed,
    /// or `usize::MAX` for hyperplanes not crossed at all.
    pub fn position_by_id(&self) -> Vec<usize> {
        let spec = self.word.spec();
        let mut table = vec![usize::MAX; spec.hyperplane_count()];
        for (k, &h) in self.crossings.iter().enumerate() {
            table[spec.hyperplane_id(h)] = k;
        }
        table
    }
}

impl fmt::Display for CrossingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = self.word.spec().family();
        for (k, h) in self.crossings.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", h.name(family))?;
        }
        Ok(())
    }
}
