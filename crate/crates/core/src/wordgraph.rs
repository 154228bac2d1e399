//! The graph of braid moves on the reduced words of a group element.
//!
//! Vertices are the reduced words; two words are adjacent when one braid
//! relation transforms one into the other: swapping two commuting letters,
//! rewriting `aba -> bab` for adjacent transpositions, or rewriting
//! `0101 -> 1010` in type B. Each edge carries the rank-two flat its move
//! reorders, and graph distance is bounded below by the size of the
//! separation set of the endpoint words.

use alloc::collections::VecDeque;
use alloc::string::ToString;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::bitset::BitSet;
use crate::coxeter::{Element, Family, GroupSpec, Word};
use crate::error::{Error, Result};
use crate::rank2::{flat_of_pair, separation, FlatTable, Rank2Flat, SeparationSet};
use crate::rng::SplitMix64;

/// Default cap on the number of reduced words an enumeration may produce.
pub const DEFAULT_WORD_BUDGET: usize = 5_000_000;

/// Largest vertex count for which exact diameters use all-pairs traversal.
pub const ALL_PAIRS_THRESHOLD: usize = 100_000;

/// Edge-label validation against the direct separation oracle checks every
/// edge up to this count, then falls back to an evenly strided sample.
pub const EDGE_VALIDATION_LIMIT: usize = 5_000;

/// All reduced words of `w`, sorted, by depth-first descent peeling: every
/// reduced word ends in a descent letter, so recursing through descents
/// visits each word exactly once.
///
/// Fails with [`Error::BudgetExceeded`] as soon as more than `budget`
/// words appear.
pub fn enumerate_words(w: &Element, budget: usize) -> Result<Vec<Word>> {
    struct Frame {
        descents: Vec<u8>,
        element: Element,
        next: usize,
    }
    let spec = w.spec();
    let mut words = Vec::new();
    let mut path: Vec<u8> = Vec::new();
    let mut stack = vec![Frame {
        descents: w.right_descents(),
        element: w.clone(),
        next: 0,
    }];
    while let Some(top) = stack.last_mut() {
        if top.descents.is_empty() {
            debug_assert!(top.element.is_identity());
            let letters: Vec<u8> = path.iter().rev().copied().collect();
            words.push(Word::new(spec, &letters)?);
            if words.len() > budget {
                return Err(Error::BudgetExceeded {
                    what: format!("the reduced word count of {w}"),
                    budget,
                });
            }
            stack.pop();
            path.pop();
            continue;
        }
        if top.next < top.descents.len() {
            let letter = top.descents[top.next];
            top.next += 1;
            let child = top.element.right_mul(letter);
            path.push(letter);
            stack.push(Frame {
                descents: child.right_descents(),
                element: child,
                next: 0,
            });
        } else {
            stack.pop();
            path.pop();
        }
    }
    words.sort();
    debug_assert!(words.windows(2).all(|p| p[0] < p[1]), "duplicate words");
    Ok(words)
}

/// The words one braid move away from `r`, sorted, each with the flat the
/// move reorders. The word must be reduced.
pub fn braid_neighbors(r: &Word) -> Result<Vec<(Word, Rank2Flat)>> {
    let cs = r.crossing_sequence()?;
    let crossings = cs.crossings();
    let spec = r.spec();
    let letters = r.letters();
    let len = letters.len();
    let mut out: Vec<(Word, Rank2Flat)> = Vec::new();
    let push = |new_letters: Vec<u8>, k: usize, out: &mut Vec<(Word, Rank2Flat)>| {
        let label = flat_of_pair(spec, crossings[k], crossings[k + 1]);
        let word = Word::new(spec, &new_letters).expect("letters were already validated");
        debug_assert!(word.is_reduced());
        debug_assert_eq!(word.evaluate(), r.evaluate());
        out.push((word, label));
    };
    for k in 0..len.saturating_sub(1) {
        let (x, y) = (letters[k], letters[k + 1]);
        let gap = (x as i16 - y as i16).abs();
        if gap >= 2 {
            let mut nl = letters.to_vec();
            nl.swap(k, k + 1);
            push(nl, k, &mut out);
        } else if gap == 1 && x.min(y) >= 1 {
            if k + 2 < len && letters[k + 2] == x {
                let mut nl = letters.to_vec();
                nl[k] = y;
                nl[k + 1] = x;
                nl[k + 2] = y;
                push(nl, k, &mut out);
            }
        } else if gap == 1 && spec.family() == Family::TypeB {
            // x and y are 0 and 1 in some order
            if k + 3 < len && letters[k + 2] == x && letters[k + 3] == y {
                let mut nl = letters.to_vec();
                nl[k] = y;
                nl[k + 1] = x;
                nl[k + 2] = y;
                nl[k + 3] = x;
                push(nl, k, &mut out);
            }
        }
    }
    out.sort();
    debug_assert!(out.windows(2).all(|p| p[0].0 < p[1].0), "duplicate neighbors");
    Ok(out)
}

/// One labeled graph edge between vertex indices `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub label: Rank2Flat,
}

/// The braid-move graph of one element, with per-vertex orientation bits
/// for constant-time separation sizes.
#[derive(Debug, Clone)]
pub struct WordGraph {
    element: Element,
    words: Vec<Word>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<u32>>,
    table: FlatTable,
    orientations: Vec<BitSet>,
}

/// Build the graph of all reduced words of `w`.
///
/// Construction cross-checks itself: every braid neighbor must land in the
/// enumerated word set, every edge must change exactly one orientation
/// bit, edge labels are compared against the direct separation oracle (all
/// edges up to [`EDGE_VALIDATION_LIMIT`], an evenly strided sample past
/// it), and the graph must come out connected. Violations are bugs and
/// surface as [`Error::InvariantViolation`].
pub fn build_graph(w: &Element, budget: usize) -> Result<WordGraph> {
    let words = enumerate_words(w, budget)?;
    let table = FlatTable::for_element(w);
    let orientations: Vec<BitSet> = words
        .iter()
        .map(|r| Ok(table.orientation(&r.crossing_sequence()?)))
        .collect::<Result<_>>()?;
    let mut edges = Vec::new();
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); words.len()];
    for (i, r) in words.iter().enumerate() {
        for (neighbor, label) in braid_neighbors(r)? {
            let j = words.binary_search(&neighbor).map_err(|_| Error::InvariantViolation {
                what: format!("braid move from {r} leaves the enumerated word set"),
            })?;
            adjacency[i].push(j as u32);
            if i < j {
                edges.push(Edge { u: i as u32, v: j as u32, label });
            }
        }
    }
    for e in &edges {
        if orientations[e.u as usize].xor_count(&orientations[e.v as usize]) != 1 {
            return Err(Error::InvariantViolation {
                what: format!(
                    "edge between {} and {} does not flip exactly one orientation bit",
                    words[e.u as usize], words[e.v as usize]
                ),
            });
        }
    }
    let step = if edges.len() <= EDGE_VALIDATION_LIMIT {
        1
    } else {
        edges.len().div_ceil(EDGE_VALIDATION_LIMIT)
    };
    for e in edges.iter().step_by(step) {
        let s = separation(&words[e.u as usize], &words[e.v as usize])?;
        if s.len() != 1 || !s.contains(&e.label) {
            return Err(Error::InvariantViolation {
                what: format!(
                    "edge between {} and {} carries label {} but separates {{{s}}}",
                    words[e.u as usize],
                    words[e.v as usize],
                    e.label.name()
                ),
            });
        }
    }
    let graph = WordGraph { element: w.clone(), words, edges, adjacency, table, orientations };
    let reached = graph.bfs_from(0).iter().filter(|&&d| d != u32::MAX).count();
    if reached != graph.words.len() {
        return Err(Error::InvariantViolation {
            what: format!(
                "graph of {w} is disconnected: {reached} of {} words reached",
                graph.words.len()
            ),
        });
    }
    Ok(graph)
}

impl WordGraph {
    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn spec(&self) -> GroupSpec {
        self.element.spec()
    }

    /// Vertices, sorted; the index in this slice is the vertex id.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Edges with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.words.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn flat_table(&self) -> &FlatTable {
        &self.table
    }

    /// Number of flats the element covers.
    pub fn l2_size(&self) -> usize {
        self.table.len()
    }

    pub fn index_of(&self, r: &Word) -> Option<usize> {
        self.words.binary_search(r).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adjacency[i]
    }

    pub fn orientation(&self, i: usize) -> &BitSet {
        &self.orientations[i]
    }

    /// `|sep|` between two vertices, via orientation bits.
    pub fn separation_size(&self, i: usize, j: usize) -> usize {
        self.orientations[i].xor_count(&self.orientations[j])
    }

    /// The full separation set between two vertices.
    pub fn separation_set(&self, i: usize, j: usize) -> SeparationSet {
        self.table
            .separation_from_bits(&self.orientations[i].xor(&self.orientations[j]))
    }

    fn bfs_from(&self, start: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.words.len()];
        if self.words.is_empty() {
            return dist;
        }
        let mut queue = VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                let v = v as usize;
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Distances from one source word to every vertex, paired with separation
/// sizes so the per-target slack of the metric lower bound is visible.
#[derive(Debug, Clone)]
pub struct DistanceReport {
    source: Word,
    source_index: usize,
    distances: Vec<u32>,
    separation_sizes: Vec<u32>,
}

impl DistanceReport {
    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn source_index(&self) -> usize {
        self.source_index
    }

    /// Graph distance per vertex id.
    pub fn distances(&self) -> &[u32] {
        &self.distances
    }

    /// `|sep(source, v)|` per vertex id.
    pub fn separation_sizes(&self) -> &[u32] {
        &self.separation_sizes
    }

    /// `distance - |sep|` per vertex id; never negative.
    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        self.distances
            .iter()
            .zip(&self.separation_sizes)
            .map(|(&d, &s)| d as i64 - s as i64)
    }

    pub fn eccentricity(&self) -> u32 {
        self.distances.iter().copied().max().unwrap_or(0)
    }

    pub fn max_gap(&self) -> i64 {
        self.gaps().max().unwrap_or(0)
    }

    /// First vertex (in word order) whose distance exceeds its separation
    /// size, if any.
    pub fn first_gap_index(&self) -> Option<usize> {
        self.gaps().position(|g| g != 0)
    }

    /// True when every distance meets the separation lower bound exactly.
    pub fn tight(&self) -> bool {
        self.first_gap_index().is_none()
    }
}

/// Breadth-first distances from `source`, which must be a vertex.
pub fn bfs_distances(g: &WordGraph, source: &Word) -> Result<DistanceReport> {
    let i = g
        .index_of(source)
        .ok_or_else(|| Error::SourceNotInGraph { word: source.to_string() })?;
    let distances = g.bfs_from(i);
    debug_assert!(distances.iter().all(|&d| d != u32::MAX));
    let separation_sizes = (0..g.vertex_count())
        .map(|j| g.separation_size(i, j) as u32)
        .collect();
    Ok(DistanceReport {
        source: source.clone(),
        source_index: i,
        distances,
        separation_sizes,
    })
}

/// A vertex showing a source is not tight: strictly farther than its
/// separation size.
#[derive(Debug, Clone)]
pub struct GapWitness {
    pub word: Word,
    pub distance: u32,
    pub separation: u32,
}

/// Outcome of the tightness test for one source word.
#[derive(Debug, Clone)]
pub struct AccessibilityReport {
    pub source: Word,
    pub accessible: bool,
    pub eccentricity: u32,
    pub witness: Option<GapWitness>,
}

/// A source word is accessible when every vertex lies at graph distance
/// exactly `|sep(source, v)|`; the first counterexample in word order is
/// returned otherwise.
pub fn is_accessible(g: &WordGraph, source: &Word) -> Result<AccessibilityReport> {
    let report = bfs_distances(g, source)?;
    let witness = report.first_gap_index().map(|j| GapWitness {
        word: g.words()[j].clone(),
        distance: report.distances()[j],
        separation: report.separation_sizes()[j],
    });
    Ok(AccessibilityReport {
        source: source.clone(),
        accessible: witness.is_none(),
        eccentricity: report.eccentricity(),
        witness,
    })
}

/// How a diameter may be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiameterMode {
    /// All-pairs traversal when the graph is small enough, otherwise a
    /// sweep heuristic that only gives a lower bound.
    Exact,
    /// Use the closed-form count of rank-two flats; valid only for the
    /// longest element, whose graph diameter equals that count.
    TheoremShortcut,
}

/// Which computation produced a diameter value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiameterMethod {
    AllPairsBfs,
    SweepLowerBound,
    ClosedForm,
}

/// A diameter value; `exhaustive` is false when it is only a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterResult {
    pub value: u64,
    pub exhaustive: bool,
    pub method: DiameterMethod,
}

/// Graph diameter with default thresholds; see [`diameter_with`].
pub fn diameter(g: &WordGraph, mode: DiameterMode) -> Result<DiameterResult> {
    diameter_with(g, mode, ALL_PAIRS_THRESHOLD, 8, 0)
}

/// Graph diameter.
///
/// `Exact` runs all-pairs traversal up to `all_pairs_threshold` vertices;
/// past that it reports the best of `sweeps` seeded double sweeps and
/// marks the result non-exhaustive. `TheoremShortcut` rejects any element
/// but the longest with [`Error::NotLongestElement`].
pub fn diameter_with(
    g: &WordGraph,
    mode: DiameterMode,
    all_pairs_threshold: usize,
    sweeps: usize,
    seed: u64,
) -> Result<DiameterResult> {
    match mode {
        DiameterMode::TheoremShortcut => {
            let spec = g.spec();
            if g.element() != &spec.longest_element() {
                return Err(Error::NotLongestElement {
                    element: g.element().to_string(),
                });
            }
            let family = match spec.family() {
                Family::TypeA => crate::formulas::WeylFamily::A,
                Family::TypeB => crate::formulas::WeylFamily::B,
            };
            let value = crate::formulas::l2_closed_form(family, Some(spec.n() as u64))?;
            Ok(DiameterResult { value, exhaustive: true, method: DiameterMethod::ClosedForm })
        }
        DiameterMode::Exact => {
            let n = g.vertex_count();
            if n <= all_pairs_threshold {
                let mut best = 0u32;
                for i in 0..n {
                    let ecc = g.bfs_from(i).into_iter().max().unwrap_or(0);
                    best = best.max(ecc);
                }
                Ok(DiameterResult {
                    value: best as u64,
                    exhaustive: true,
                    method: DiameterMethod::AllPairsBfs,
                })
            } else {
                let mut rng = SplitMix64::new(seed);
                let mut best = 0u32;
                let mut start = 0usize;
                for sweep in 0..sweeps.max(1) {
                    let dist = g.bfs_from(start);
                    let (far, far_dist) = dist
                        .iter()
                        .enumerate()
                        .max_by_key(|&(i, &d)| (d, core::cmp::Reverse(i)))
                        .map(|(i, &d)| (i, d))
                        .unwrap_or((0, 0));
                    best = best.max(far_dist);
                    let second = g.bfs_from(far);
                    best = best.max(second.into_iter().max().unwrap_or(0));
                    start = if sweep == 0 { far } else { rng.next_below(n) };
                }
                Ok(DiameterResult {
                    value: best as u64,
                    exhaustive: false,
                    method: DiameterMethod::SweepLowerBound,
                })
            }
        }
    }
}

/// The antipodal word: the reversal of `r`, with letters flipped through
/// `i -> n - i` in type A. Defined on reduced words of the longest
/// element, where it reverses the whole crossing sequence, so the antipode
/// disagrees with `r` on every covered flat.
pub fn antipode(r: &Word) -> Result<Word> {
    let spec = r.spec();
    r.crossing_sequence()?;
    if r.evaluate() != spec.longest_element() {
        return Err(Error::NotLongestElement {
            element: r.evaluate().to_string(),
        });
    }
    let letters: Vec<u8> = r
        .letters()
        .iter()
        .rev()
        .map(|&l| match spec.family() {
            Family::TypeA => spec.n() as u8 - l,
            Family::TypeB => l,
        })
        .collect();
    Word::new(spec, &letters)
}
