//! Rank-two flats of the reflection arrangement, the crossing orders a
//! reduced word induces on them, and the set-valued separation metric
//! between reduced words of a common element.
//!
//! A rank-two flat is the set of all hyperplanes containing a fixed
//! codimension-two intersection of two of them. In type A a flat has two
//! or three members; type B adds flats of four. A reduced word crosses the
//! members of each flat it covers in one of two mutually reversed orders,
//! so the flats on which two words disagree form a set-valued distance:
//! the separation set. Its size is a lower bound for the braid-move
//! distance, and it changes by exactly one flat along each graph edge.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::bitset::BitSet;
use crate::coxeter::{CrossingSequence, Element, Family, GroupSpec, Hyperplane, Word};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// A rank-two flat, stored as its full sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank2Flat {
    spec: GroupSpec,
    members: Vec<Hyperplane>,
}

impl Rank2Flat {
    /// All hyperplanes through the flat, sorted; between two and four.
    pub fn members(&self) -> &[Hyperplane] {
        &self.members
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, h: Hyperplane) -> bool {
        self.members.binary_search(&h).is_ok()
    }

    /// Display name.
    ///
    /// Type A: a three-member flat on coordinates `p < q < r` prints as
    /// `X_{pqr}`, a two-member flat with walls `H_{ij}` and `H_{kl}` as
    /// `X_{ij,kl}` (elements separated by commas and pairs by dots once a
    /// coordinate passes 9). Type B: the defining equations of the first
    /// two members in braces, e.g. `{x1=0,x2=0}`; any two members of a
    /// flat determine it.
    pub fn name(&self) -> String {
        match self.spec.family() {
            Family::TypeA => {
                let mut coords = BTreeSet::new();
                for h in &self.members {
                    let (i, j) = h.support();
                    coords.insert(i);
                    coords.extend(j);
                }
                let compact = *coords.iter().next_back().unwrap() <= 9;
                if self.members.len() == 3 {
                    let parts: Vec<String> =
                        coords.iter().map(|c| c.to_string()).collect();
                    if compact {
                        format!("X_{{{}}}", parts.join(""))
                    } else {
                        format!("X_{{{}}}", parts.join(","))
                    }
                } else {
                    let pairs: Vec<String> = self
                        .members
                        .iter()
                        .map(|h| {
                            let (i, j) = h.support();
                            let j = j.unwrap();
                            if compact {
                                format!("{i}{j}")
                            } else {
                                format!("{i}.{j}")
                            }
                        })
                        .collect();
                    format!("X_{{{}}}", pairs.join(","))
                }
            }
            Family::TypeB => {
                let family = self.spec.family();
                format!(
                    "{{{},{}}}",
                    self.members[0].name(family),
                    self.members[1].name(family)
                )
            }
        }
    }
}

impl fmt::Display for Rank2Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn b2_flat(spec: GroupSpec, i: u16, j: u16) -> Rank2Flat {
    let (i, j) = (i.min(j), i.max(j));
    Rank2Flat {
        spec,
        members: vec![
            Hyperplane::zero(i),
            Hyperplane::zero(j),
            Hyperplane::plus(i, j),
            Hyperplane::minus(i, j),
        ],
    }
}

fn two_member(spec: GroupSpec, a: Hyperplane, b: Hyperplane) -> Rank2Flat {
    let mut members = vec![a, b];
    members.sort();
    Rank2Flat { spec, members }
}

fn pair_sign(h: Hyperplane) -> i8 {
    match h {
        Hyperplane::Plus { .. } => 1,
        Hyperplane::Minus { .. } => -1,
        Hyperplane::Zero { .. } => panic!("sign of a coordinate wall"),
    }
}

fn signed_pair(i: u16, j: u16, sign: i8) -> Hyperplane {
    if sign > 0 {
        Hyperplane::plus(i, j)
    } else {
        Hyperplane::minus(i, j)
    }
}

/// The rank-two flat spanned by two distinct hyperplanes: every hyperplane
/// of the arrangement containing their intersection.
///
/// # Panics
/// Panics when the hyperplanes are equal or do not belong to the family.
pub fn flat_of_pair(spec: GroupSpec, a: Hyperplane, b: Hyperplane) -> Rank2Flat {
    assert!(a != b, "a flat needs two distinct hyperplanes");
    if spec.family() == Family::TypeA {
        assert!(
            matches!(a, Hyperplane::Plus { .. }) && matches!(b, Hyperplane::Plus { .. }),
            "type A only has walls x_i = x_j"
        );
    }
    let (a, b) = (a.min(b), a.max(b));
    match (a, b) {
        (Hyperplane::Zero { i }, Hyperplane::Zero { i: j }) => b2_flat(spec, i, j),
        (Hyperplane::Zero { i }, Hyperplane::Plus { i: p, j: q })
        | (Hyperplane::Zero { i }, Hyperplane::Minus { i: p, j: q }) => {
            if i == p || i == q {
                b2_flat(spec, p, q)
            } else {
                two_member(spec, a, b)
            }
        }
        _ => {
            // two walls relating pairs of coordinates
            let (p, q) = a.support();
            let (r, s) = b.support();
            let (q, s) = (q.unwrap(), s.unwrap());
            if (p, q) == (r, s) {
                return b2_flat(spec, p, q);
            }
            let shared = if p == r || p == s {
                Some(p)
            } else if q == r || q == s {
                Some(q)
            } else {
                None
            };
            match shared {
                None => two_member(spec, a, b),
                Some(y) => {
                    if spec.family() == Family::TypeA {
                        let mut coords: Vec<u16> =
                            [p, q, r, s].iter().copied().filter(|&c| c != y).collect();
                        coords.sort();
                        coords.dedup();
                        let (u, v) = (coords[0], coords[1]);
                        let mut members = vec![
                            Hyperplane::plus(u, v),
                            Hyperplane::plus(u.min(y), u.max(y)),
                            Hyperplane::plus(v.min(y), v.max(y)),
                        ];
                        members.sort();
                        Rank2Flat { spec, members }
                    } else {
                        // the two relations compose to one on the outer pair,
                        // with the product of the signs
                        let x = if p == y { q } else { p };
                        let z = if r == y { s } else { r };
                        let third = signed_pair(x, z, pair_sign(a) * pair_sign(b));
                        let mut members = vec![a, b, third];
                        members.sort();
                        Rank2Flat { spec, members }
                    }
                }
            }
        }
    }
}

/// Every rank-two flat of the group's reflection arrangement, sorted.
pub fn enumerate_flats(spec: GroupSpec) -> Vec<Rank2Flat> {
    let hs = spec.hyperplanes();
    let mut out = BTreeSet::new();
    for (k, &a) in hs.iter().enumerate() {
        for &b in &hs[k + 1..] {
            out.insert(flat_of_pair(spec, a, b));
        }
    }
    out.into_iter().collect()
}

/// The flats an element covers: those whose members all lie in its
/// inversion set. These are exactly the flats on which reduced words of
/// the element can disagree.
pub fn l2_of(w: &Element) -> Vec<Rank2Flat> {
    let inv: Vec<Hyperplane> = w.inversion_set().into_iter().collect();
    let spec = w.spec();
    let mut out = BTreeSet::new();
    for (k, &a) in inv.iter().enumerate() {
        for &b in &inv[k + 1..] {
            let flat = flat_of_pair(spec, a, b);
            if flat.members().iter().all(|&h| w.inverts(h)) {
                out.insert(flat);
            }
        }
    }
    out.into_iter().collect()
}

/// The covered flats of one element, indexed for fast orientation lookups.
#[derive(Debug, Clone)]
pub struct FlatTable {
    spec: GroupSpec,
    element: Element,
    flats: Vec<Rank2Flat>,
    pair_ids: Vec<(u32, u32)>,
}

impl FlatTable {
    /// Table over `l2_of(w)`.
    pub fn for_element(w: &Element) -> FlatTable {
        let spec = w.spec();
        let flats = l2_of(w);
        let pair_ids = flats
            .iter()
            .map(|x| {
                let m = x.members();
                (
                    spec.hyperplane_id(m[0]) as u32,
                    spec.hyperplane_id(m[1]) as u32,
                )
            })
            .collect();
        FlatTable { spec, element: w.clone(), flats, pair_ids }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn flats(&self) -> &[Rank2Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn get(&self, k: usize) -> &Rank2Flat {
        &self.flats[k]
    }

    pub fn index_of(&self, x: &Rank2Flat) -> Option<usize> {
        self.flats.binary_search(x).ok()
    }

    /// One bit per flat: whether the word crosses the flat's first member
    /// before its second. Two words of the element disagree on a flat
    /// exactly when these bits differ, so separation sets become XORs.
    ///
    /// The crossing sequence must come from a reduced word of the table's
    /// element; every member of every flat is then crossed.
    pub fn orientation(&self, cs: &CrossingSequence) -> BitSet {
        debug_assert_eq!(cs.word().evaluate(), self.element);
        let pos = cs.position_by_id();
        let mut bits = BitSet::new(self.flats.len());
        for (k, &(a, b)) in self.pair_ids.iter().enumerate() {
            let (pa, pb) = (pos[a as usize], pos[b as usize]);
            debug_assert!(pa != usize::MAX && pb != usize::MAX, "member not crossed");
            bits.set(k, pa < pb);
        }
        bits
    }

    /// Rebuild a separation set from the XOR of two orientation vectors.
    pub fn separation_from_bits(&self, bits: &BitSet) -> SeparationSet {
        assert_eq!(bits.len(), self.flats.len());
        let flats = bits.iter_ones().map(|k| self.flats[k].clone()).collect();
        SeparationSet { spec: self.spec, flats }
    }

    /// Encode a separation set as bits over this table; `None` when the
    /// set mentions a flat outside the table.
    pub fn bits_of_set(&self, s: &SeparationSet) -> Option<BitSet> {
        let mut bits = BitSet::new(self.flats.len());
        for flat in s.iter() {
            bits.set(self.index_of(flat)?, true);
        }
        Some(bits)
    }
}

/// The order in which one reduced word crosses the members of one flat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedOrder {
    flat: Rank2Flat,
    order: Vec<Hyperplane>,
}

impl InducedOrder {
    pub fn flat(&self) -> &Rank2Flat {
        &self.flat
    }

    /// The flat's members sorted by crossing position.
    pub fn order(&self) -> &[Hyperplane] {
        &self.order
    }
}

fn induced_order_in(cs: &CrossingSequence, x: &Rank2Flat) -> Result<InducedOrder> {
    let mut with_pos = Vec::with_capacity(x.size());
    for &h in x.members() {
        let pos = cs
            .crossings()
            .iter()
            .position(|&g| g == h)
            .ok_or_else(|| Error::Unsupported {
                reason: format!(
                    "flat {} is not covered by the inversion set of {}",
                    x.name(),
                    cs.word().evaluate()
                ),
            })?;
        with_pos.push((pos, h));
    }
    with_pos.sort();
    Ok(InducedOrder {
        flat: x.clone(),
        order: with_pos.into_iter().map(|(_, h)| h).collect(),
    })
}

/// The member order a reduced word induces on a covered flat.
///
/// The word must be reduced and the flat fully contained in the inversion
/// set of its product.
pub fn induced_order(r: &Word, x: &Rank2Flat) -> Result<InducedOrder> {
    let cs = r.crossing_sequence()?;
    induced_order_in(&cs, x)
}

/// The set of flats two reduced words disagree on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationSet {
    spec: GroupSpec,
    flats: BTreeSet<Rank2Flat>,
}

impl SeparationSet {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn contains(&self, x: &Rank2Flat) -> bool {
        self.flats.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rank2Flat> {
        self.flats.iter()
    }

    /// Symmetric difference, the composition law of the metric.
    pub fn symmetric_difference(&self, other: &SeparationSet) -> SeparationSet {
        assert_eq!(self.spec, other.spec);
        let flats = self
            .flats
            .symmetric_difference(&other.flats)
            .cloned()
            .collect();
        SeparationSet { spec: self.spec, flats }
    }
}

impl fmt::Display for SeparationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, flat) in self.flats.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", flat.name())?;
        }
        Ok(())
    }
}

fn common_element(x: &Word, y: &Word) -> Result<Element> {
    if x.spec() != y.spec() {
        return Err(Error::Unsupported {
            reason: "separation needs two words from the same group".to_string(),
        });
    }
    let (wx, wy) = (x.evaluate(), y.evaluate());
    if wx != wy {
        return Err(Error::Unsupported {
            reason: format!("words evaluate to different elements {wx} and {wy}"),
        });
    }
    Ok(wx)
}

/// Separation set of two reduced words of the same element, computed
/// directly: for each covered flat, extract both induced member orders and
/// compare. [`FlatTable::orientation`] gives the fast equivalent; keeping
/// this path independent lets tests check one against the other.
pub fn separation(x: &Word, y: &Word) -> Result<SeparationSet> {
    let w = common_element(x, y)?;
    let cx = x.crossing_sequence()?;
    let cy = y.crossing_sequence()?;
    let spec = w.spec();
    let mut flats = BTreeSet::new();
    for flat in l2_of(&w) {
        let ox = induced_order_in(&cx, &flat)?;
        let oy = induced_order_in(&cy, &flat)?;
        if ox.order() != oy.order() {
            flats.insert(flat);
        }
    }
    Ok(SeparationSet { spec, flats })
}

/// Knobs for [`verify_metric_axioms`].
#[derive(Debug, Clone)]
pub struct MetricCheckConfig {
    /// Check every pair and triple when the word list is at most this long.
    pub exhaustive_threshold: usize,
    /// Pairs drawn per run in sampling mode.
    pub sampled_pairs: usize,
    /// Triples drawn per run in sampling mode.
    pub sampled_triples: usize,
    /// Seed for sampling mode; equal seeds draw equal samples.
    pub seed: u64,
}

impl Default for MetricCheckConfig {
    fn default() -> Self {
        MetricCheckConfig {
            exhaustive_threshold: 200,
            sampled_pairs: 2000,
            sampled_triples: 2000,
            seed: 0,
        }
    }
}

/// What [`verify_metric_axioms`] measured and found.
#[derive(Debug, Clone)]
pub struct MetricReport {
    pub word_count: usize,
    /// True when every pair and triple was checked.
    pub exhaustive: bool,
    /// Pairs checked for symmetry and agreement with the orientation path.
    pub pair_checks: u64,
    /// Triples checked for the composition law.
    pub triple_checks: u64,
    /// Pairs checked for the edge characterization.
    pub edge_checks: u64,
    /// Total number of violated properties.
    pub failure_count: u64,
    /// Descriptions of the first violations, at most [`MetricReport::MAX_REPORTED`].
    pub failures: Vec<String>,
}

impl MetricReport {
    pub const MAX_REPORTED: usize = 24;

    pub fn pass(&self) -> bool {
        self.failure_count == 0
    }

    fn record(&mut self, message: String) {
        self.failure_count += 1;
        if self.failures.len() < Self::MAX_REPORTED {
            self.failures.push(message);
        }
    }
}

/// Check the metric axioms of the separation map over a list of reduced
/// words of one element:
///
/// * symmetry: `sep(x, y) == sep(y, x)`;
/// * agreement between the direct and the orientation-bit computation;
/// * composition: `sep(x, z)` is the symmetric difference of `sep(x, y)`
///   and `sep(y, z)`;
/// * edge characterization: `|sep(x, y)| == 1` exactly when a single braid
///   move links `x` and `y`;
/// * injectivity of `r -> sep(words[0], r)` over the list.
///
/// Runs every pair and triple when the list is short (the config
/// threshold); otherwise draws a seeded sample.
pub fn verify_metric_axioms(words: &[Word], cfg: &MetricCheckConfig) -> Result<MetricReport> {
    verify_metric_axioms_with(words, cfg, separation)
}

/// [`verify_metric_axioms`] with the separation function supplied by the
/// caller, so a deliberately broken metric can be shown to fail.
pub fn verify_metric_axioms_with<F>(
    words: &[Word],
    cfg: &MetricCheckConfig,
    mut sep: F,
) -> Result<MetricReport>
where
    F: FnMut(&Word, &Word) -> Result<SeparationSet>,
{
    if words.is_empty() {
        return Err(Error::Unsupported {
            reason: "the metric harness needs at least one word".to_string(),
        });
    }
    let w = words[0].evaluate();
    for r in words {
        if r.spec() != words[0].spec() || r.evaluate() != w {
            return Err(Error::Unsupported {
                reason: format!("word {r} does not evaluate to {w}"),
            });
        }
        r.crossing_sequence()?;
    }
    let table = FlatTable::for_element(&w);
    let orientations: Vec<BitSet> = words
        .iter()
        .map(|r| Ok(table.orientation(&r.crossing_sequence()?)))
        .collect::<Result<_>>()?;
    let neighbor_sets: Vec<BTreeSet<Word>> = words
        .iter()
        .map(|r| {
            Ok(crate::wordgraph::braid_neighbors(r)?
                .into_iter()
                .map(|(word, _)| word)
                .collect())
        })
        .collect::<Result<_>>()?;

    let n = words.len();
    let exhaustive = n <= cfg.exhaustive_threshold;
    let mut report = MetricReport {
        word_count: n,
        exhaustive,
        pair_checks: 0,
        triple_checks: 0,
        edge_checks: 0,
        failure_count: 0,
        failures: Vec::new(),
    };

    // One symmetry + agreement + edge check of the pair (i, j); the
    // returned bits encode what `sep` reported.
    let check_pair = |report: &mut MetricReport, sep: &mut F, i: usize, j: usize| -> Result<BitSet> {
        let s_ij = sep(&words[i], &words[j])?;
        let s_ji = sep(&words[j], &words[i])?;
        report.pair_checks += 1;
        if s_ij != s_ji {
            report.record(format!(
                "symmetry broken between {} and {}",
                words[i], words[j]
            ));
        }
        let bits = match table.bits_of_set(&s_ij) {
            Some(bits) => bits,
            None => {
                report.record(format!(
                    "separation of {} and {} mentions a flat outside the covered set",
                    words[i], words[j]
                ));
                BitSet::new(table.len())
            }
        };
        if bits != orientations[i].xor(&orientations[j]) {
            report.record(format!(
                "direct separation of {} and {} disagrees with the orientation bits",
                words[i], words[j]
            ));
        }
        report.edge_checks += 1;
        let adjacent = neighbor_sets[i].contains(&words[j]);
        if (s_ij.len() == 1) != adjacent {
            report.record(format!(
                "edge characterization broken between {} and {}: |sep| = {}, adjacent = {}",
                words[i],
                words[j],
                s_ij.len(),
                adjacent
            ));
        }
        Ok(bits)
    };

    if exhaustive {
        let mut pair_bits: Vec<Vec<BitSet>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                let bits = check_pair(&mut report, &mut sep, i, j)?;
                pair_bits[i].push(bits);
            }
        }
        let at = |i: usize, j: usize| -> &BitSet {
            // stored for i < j at offset j - i - 1
            &pair_bits[i][j - i - 1]
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    report.triple_checks += 1;
                    let composed = at(i, j).xor(at(j, k));
                    if &composed != at(i, k) {
                        report.record(format!(
                            "composition broken on {}, {}, {}",
                            words[i], words[j], words[k]
                        ));
                    }
                }
            }
        }
        // injectivity against the base word
        let mut images: Vec<(&BitSet, usize)> = Vec::with_capacity(n);
        let empty = BitSet::new(table.len());
        for j in 0..n {
            let bits = if j == 0 { &empty } else { at(0, j) };
            images.push((bits, j));
        }
        images.sort();
        for pair in images.windows(2) {
            if pair[0].0 == pair[1].0 {
                report.record(format!(
                    "injectivity broken: {} and {} have equal separation from {}",
                    words[pair[0].1], words[pair[1].1], words[0]
                ));
            }
        }
    } else {
        let mut rng = SplitMix64::new(cfg.seed);
        for _ in 0..cfg.sampled_pairs {
            let i = rng.next_below(n);
            let j = rng.next_below(n);
            if i == j {
                continue;
            }
            check_pair(&mut report, &mut sep, i, j)?;
        }
        for _ in 0..cfg.sampled_triples {
            let (i, j, k) = (rng.next_below(n), rng.next_below(n), rng.next_below(n));
            if i == j || j == k || i == k {
                continue;
            }
            report.triple_checks += 1;
            let s_ij = sep(&words[i], &words[j])?;
            let s_jk = sep(&words[j], &words[k])?;
            let s_ik = sep(&words[i], &words[k])?;
            if s_ij.symmetric_difference(&s_jk) != s_ik {
                report.record(format!(
                    "composition broken on {}, {}, {}",
                    words[i], words[j], words[k]
                ));
            }
        }
        // every listed word against each of its braid neighbors
        for (i, r) in words.iter().enumerate() {
            for neighbor in &neighbor_sets[i] {
                report.edge_checks += 1;
                let s = sep(r, neighbor)?;
                if s.len() != 1 {
                    report.record(format!(
                        "edge characterization broken between {r} and its neighbor {neighbor}: |sep| = {}",
                        s.len()
                    ));
                }
            }
        }
    }
    Ok(report)
}
