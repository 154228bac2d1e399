//! A canonical reduced word for every element, built to cross walls in
//! weakly increasing level order, plus an independent greedy walk that
//! must reproduce it and an accessibility certificate tying the word to
//! its graph.
//!
//! The level of a wall is the largest coordinate index it mentions. The
//! walls of a fixed level form the new reflections that appear when the
//! group grows by one generator, so a word whose crossing levels never
//! decrease peels the element one stage at a time: first sort the largest
//! value into place, then the next, and so on.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::coxeter::{Element, Family, GroupSpec, Hyperplane, Word};
use crate::error::{Error, Result};
use crate::wordgraph::{build_graph, is_accessible, AccessibilityReport};

/// The largest coordinate index a wall mentions.
pub fn flag_level(h: Hyperplane) -> u16 {
    h.max_coordinate()
}

/// All walls grouped by level, levels ascending and walls sorted within
/// each level.
pub fn flag_levels(spec: GroupSpec) -> Vec<(u16, Vec<Hyperplane>)> {
    let mut by_level: BTreeMap<u16, Vec<Hyperplane>> = BTreeMap::new();
    for h in spec.hyperplanes() {
        by_level.entry(flag_level(h)).or_default().push(h);
    }
    by_level.into_iter().collect()
}

/// True when the word's wall crossings occur in weakly increasing level
/// order.
pub fn is_flag_monotone(r: &Word) -> Result<bool> {
    let cs = r.crossing_sequence()?;
    Ok(cs
        .crossings()
        .windows(2)
        .all(|pair| flag_level(pair[0]) <= flag_level(pair[1])))
}

/// The canonical reduced word of `w`, crossing walls level by level.
///
/// Stage `m` (taken from the top down) moves the entry of absolute value
/// `m` from its current position `p` to the end of the line: a positive
/// entry uses `m-1, ..., p`, a negative one walks down to the sign
/// generator and back up, `m-1, ..., 1, 0, 1, ..., p-1`. Concatenating
/// the stages in increasing order of `m` yields a reduced word for `w`
/// whose crossing levels never decrease.
pub fn canonical_word(w: &Element) -> Result<Word> {
    let spec = w.spec();
    let mut entries: Vec<i32> = w.images().to_vec();
    let lowest = match spec.family() {
        Family::TypeA => 2,
        Family::TypeB => 1,
    };
    let mut stages: Vec<Vec<u8>> = Vec::new();
    for m in (lowest..=spec.n()).rev() {
        let p = entries
            .iter()
            .position(|&v| v.unsigned_abs() as usize == m)
            .expect("element images cover every absolute value once")
            + 1;
        let negative = entries[p - 1] < 0;
        let mut suffix: Vec<u8> = Vec::new();
        if negative {
            for letter in (1..m).rev() {
                suffix.push(letter as u8);
            }
            suffix.push(0);
            for letter in 1..p {
                suffix.push(letter as u8);
            }
        } else {
            for letter in (p..m).rev() {
                suffix.push(letter as u8);
            }
        }
        stages.push(suffix);
        entries.remove(p - 1);
    }
    let mut letters: Vec<u8> = Vec::new();
    for suffix in stages.iter().rev() {
        letters.extend_from_slice(suffix);
    }
    let word = Word::new(spec, &letters)?;
    if !word.is_reduced() {
        return Err(Error::InvariantViolation {
            what: format!("the stage-by-stage word for {w} is not reduced"),
        });
    }
    if &word.evaluate() != w {
        return Err(Error::InvariantViolation {
            what: format!("the stage-by-stage word for {w} evaluates elsewhere"),
        });
    }
    if !is_flag_monotone(&word)? {
        return Err(Error::InvariantViolation {
            what: format!("the stage-by-stage word for {w} crosses levels out of order"),
        });
    }
    Ok(word)
}

/// The canonical word of the longest element.
pub fn canonical_word_w0(spec: GroupSpec) -> Result<Word> {
    canonical_word(&spec.longest_element())
}

/// Rebuild the canonical word with no reference to the stage rule: walk
/// from the identity toward `w`, always crossing the still-uncrossed
/// inversion wall of minimal level. At every step exactly one generator
/// qualifies; a tie or a dead end would disprove the construction, so
/// either is reported as an invariant violation.
pub fn greedy_flag_word(w: &Element) -> Result<Word> {
    let spec = w.spec();
    let mut remaining = w.inversion_set();
    let mut here = spec.identity();
    let mut letters: Vec<u8> = Vec::new();
    while !remaining.is_empty() {
        let min_level = remaining.iter().map(|&h| flag_level(h)).min().unwrap();
        let mut chosen: Option<u8> = None;
        let mut admissible = 0usize;
        for letter in spec.generators() {
            let wall = here.wall(letter);
            if flag_level(wall) == min_level && remaining.contains(&wall) {
                admissible += 1;
                chosen = Some(letter);
            }
        }
        if admissible != 1 {
            return Err(Error::InvariantViolation {
                what: format!(
                    "the greedy walk toward {w} found {admissible} admissible crossings at level {min_level}"
                ),
            });
        }
        let letter = chosen.unwrap();
        remaining.remove(&here.wall(letter));
        here = here.right_mul(letter);
        letters.push(letter);
    }
    if &here != w {
        return Err(Error::InvariantViolation {
            what: format!("the greedy walk ended at {here} instead of {w}"),
        });
    }
    Word::new(spec, &letters)
}

/// Evidence that distances from the canonical word match separation
/// sizes everywhere in the element's graph.
#[derive(Debug, Clone)]
pub struct AccessibilityCertificate {
    pub element: Element,
    pub word: Word,
    pub flag_monotone: bool,
    pub word_count: usize,
    pub l2_size: usize,
    pub report: AccessibilityReport,
}

impl AccessibilityCertificate {
    pub fn pass(&self) -> bool {
        self.flag_monotone && self.report.accessible
    }
}

/// Build the element's graph and check that the canonical word reaches
/// every vertex in exactly its separation size, recording the evidence.
pub fn certify_accessibility(w: &Element, word_budget: usize) -> Result<AccessibilityCertificate> {
    let word = canonical_word(w)?;
    let flag_monotone = is_flag_monotone(&word)?;
    let graph = build_graph(w, word_budget)?;
    let report = is_accessible(&graph, &word)?;
    Ok(AccessibilityCertificate {
        element: w.clone(),
        word,
        flag_monotone,
        word_count: graph.vertex_count(),
        l2_size: graph.l2_size(),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordgraph::DEFAULT_WORD_BUDGET;
    use alloc::string::ToString;

    fn a(n: usize) -> GroupSpec {
        GroupSpec::type_a(n).unwrap()
    }

    fn b(n: usize) -> GroupSpec {
        GroupSpec::type_b(n).unwrap()
    }

    fn el(spec: GroupSpec, s: &str) -> Element {
        Element::parse(spec, s).unwrap()
    }

    #[test]
    fn levels_partition_the_walls() {
        let levels = flag_levels(a(4));
        assert_eq!(
            levels
                .iter()
                .map(|(level, walls)| (*level, walls.len()))
                .collect::<Vec<_>>(),
            [(2, 1), (3, 2), (4, 3)]
        );
        let levels = flag_levels(b(2));
        assert_eq!(
            levels
                .iter()
                .map(|(level, walls)| (*level, walls.len()))
                .collect::<Vec<_>>(),
            [(1, 1), (2, 3)]
        );
        for (level, walls) in flag_levels(b(3)) {
            for w in walls {
                assert_eq!(flag_level(w), level);
            }
        }
    }

    #[test]
    fn canonical_words_pinned() {
        assert_eq!(canonical_word(&el(a(6), "316425")).unwrap().to_string(), "213543");
        assert_eq!(canonical_word(&el(b(3), "-3,-2,-1")).unwrap().to_string(), "010210");
        assert_eq!(canonical_word(&el(a(4), "3412")).unwrap().to_string(), "2132");
        assert_eq!(canonical_word(&el(a(4), "1234")).unwrap().to_string(), "");
        assert_eq!(canonical_word_w0(a(4)).unwrap().to_string(), "121321");
        assert_eq!(canonical_word_w0(b(2)).unwrap().to_string(), "0101");
        assert_eq!(canonical_word_w0(b(3)).unwrap().to_string(), "010121012");
    }

    #[test]
    fn pinned_crossing_levels() {
        let word = canonical_word(&el(a(6), "316425")).unwrap();
        let cs = word.crossing_sequence().unwrap();
        let levels: Vec<u16> = cs.crossings().iter().map(|&h| flag_level(h)).collect();
        assert_eq!(levels, [3, 3, 4, 6, 6, 6]);
        assert_eq!(cs.to_string(), "H_{23},H_{13},H_{24},H_{56},H_{26},H_{46}");
    }

    #[test]
    fn monotonicity_detects_disorder() {
        let up = Word::parse(a(4), "121321").unwrap();
        assert!(is_flag_monotone(&up).unwrap());
        let down = Word::parse(a(4), "123121").unwrap();
        assert!(!is_flag_monotone(&down).unwrap());
        assert!(is_flag_monotone(&Word::parse(a(4), "").unwrap()).unwrap());
    }

    #[test]
    fn greedy_walk_agrees_everywhere_small() {
        for spec in [a(2), a(3), a(4), b(1), b(2), b(3)] {
            for w in spec.elements() {
                let canonical = canonical_word(&w).unwrap();
                let greedy = greedy_flag_word(&w).unwrap();
                assert_eq!(canonical, greedy, "element {w} of {spec}");
            }
        }
    }

    #[test]
    fn greedy_walk_agrees_on_larger_elements() {
        for s in ["53412", "45321", "54321", "25431"] {
            let w = el(a(5), s);
            assert_eq!(canonical_word(&w).unwrap(), greedy_flag_word(&w).unwrap());
        }
        for s in ["-1,-2,-3,-4", "3,-1,4,-2", "-4,3,2,-1"] {
            let w = el(b(4), s);
            assert_eq!(canonical_word(&w).unwrap(), greedy_flag_word(&w).unwrap());
        }
    }

    #[test]
    fn certificates_pass_on_whole_groups() {
        for spec in [a(4), b(3)] {
            for w in spec.elements() {
                let cert = certify_accessibility(&w, DEFAULT_WORD_BUDGET).unwrap();
                assert!(cert.pass(), "element {w} of {spec}");
                assert!(cert.report.eccentricity as usize <= cert.l2_size, "element {w}");
            }
            let w0 = spec.longest_element();
            let cert = certify_accessibility(&w0, DEFAULT_WORD_BUDGET).unwrap();
            assert_eq!(cert.report.eccentricity as usize, cert.l2_size, "longest of {spec}");
        }
    }

    #[test]
    fn certificate_records_the_evidence() {
        let cert = certify_accessibility(&a(4).longest_element(), DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(cert.word.to_string(), "121321");
        assert_eq!((cert.word_count, cert.l2_size), (16, 7));
        assert!(cert.flag_monotone);
        assert!(cert.report.accessible);
    }
}
