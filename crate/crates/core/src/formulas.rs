//! Closed-form counts of rank-two flats for the finite reflection
//! families, an independent geometric counter to validate them, and a
//! group-wide survey of how graph diameters compare to covered-flat
//! counts.
//!
//! For the longest element the graph diameter equals the total number of
//! rank-two flats of the arrangement, so these counts double as closed-form
//! diameters.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::coxeter::{Element, Family, GroupSpec};
use crate::error::{Error, Result};
use crate::wordgraph::{build_graph, diameter, DiameterMode};

/// Finite reflection families with a known rank-two flat count.
///
/// `A` is parametrized by the number of permuted letters (the symmetric
/// group on `n` letters), `B` and `D` by the number of signed letters, and
/// `I2` by the dihedral order parameter; the exceptional families take no
/// parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeylFamily {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2,
}

impl WeylFamily {
    pub const ALL: [WeylFamily; 10] = [
        WeylFamily::A,
        WeylFamily::B,
        WeylFamily::D,
        WeylFamily::E6,
        WeylFamily::E7,
        WeylFamily::E8,
        WeylFamily::F4,
        WeylFamily::H3,
        WeylFamily::H4,
        WeylFamily::I2,
    ];

    pub fn needs_parameter(&self) -> bool {
        matches!(self, WeylFamily::A | WeylFamily::B | WeylFamily::D | WeylFamily::I2)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(WeylFamily::A),
            "B" => Ok(WeylFamily::B),
            "D" => Ok(WeylFamily::D),
            "E6" => Ok(WeylFamily::E6),
            "E7" => Ok(WeylFamily::E7),
            "E8" => Ok(WeylFamily::E8),
            "F4" => Ok(WeylFamily::F4),
            "H3" => Ok(WeylFamily::H3),
            "H4" => Ok(WeylFamily::H4),
            "I2" => Ok(WeylFamily::I2),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected one of A, B, D, E6, E7, E8, F4, H3, H4, I2".to_string(),
            }),
        }
    }
}

impl fmt::Display for WeylFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WeylFamily::A => "A",
            WeylFamily::B => "B",
            WeylFamily::D => "D",
            WeylFamily::E6 => "E6",
            WeylFamily::E7 => "E7",
            WeylFamily::E8 => "E8",
            WeylFamily::F4 => "F4",
            WeylFamily::H3 => "H3",
            WeylFamily::H4 => "H4",
            WeylFamily::I2 => "I2",
        };
        write!(f, "{s}")
    }
}

fn exact_div(value: i128, divisor: i128) -> u64 {
    debug_assert!(value >= 0 && value % divisor == 0, "non-integral count");
    (value / divisor) as u64
}

/// The number of rank-two flats of the reflection arrangement, in closed
/// form. Parametrized families require `param`; exceptional ones reject
/// it.
///
/// * `A`, param `n >= 1`: `n(n-1)(n-2)(3n-5)/24` for the symmetric group
///   on `n` letters.
/// * `B`, param `n >= 1`: `n(n-1)(3n^2-5n+1)/6`.
/// * `D`, param `n >= 2`: `n(n-1)(3n^2-11n+13)/6`.
/// * `I2`, param `m >= 2`: always 1 (all lines meet in the origin).
/// * `E6` 390, `E7` 1281, `E8` 4900, `F4` 122, `H3` 31, `H4` 722.
pub fn l2_closed_form(family: WeylFamily, param: Option<u64>) -> Result<u64> {
    let need = family.needs_parameter();
    match (need, param) {
        (true, None) => {
            return Err(Error::InvalidSpec {
                reason: format!("family {family} needs a rank parameter"),
            })
        }
        (false, Some(_)) => {
            return Err(Error::InvalidSpec {
                reason: format!("family {family} takes no parameter"),
            })
        }
        _ => {}
    }
    let fixed = |count: u64| Ok(count);
    match family {
        WeylFamily::A => {
            let n = param.unwrap() as i128;
            if n < 1 {
                return Err(Error::InvalidSpec { reason: "family A needs n >= 1".to_string() });
            }
            Ok(exact_div(n * (n - 1) * (n - 2) * (3 * n - 5), 24))
        }
        WeylFamily::B => {
            let n = param.unwrap() as i128;
            if n < 1 {
                return Err(Error::InvalidSpec { reason: "family B needs n >= 1".to_string() });
            }
            Ok(exact_div(n * (n - 1) * (3 * n * n - 5 * n + 1), 6))
        }
        WeylFamily::D => {
            let n = param.unwrap() as i128;
            if n < 2 {
                return Err(Error::InvalidSpec { reason: "family D needs n >= 2".to_string() });
            }
            Ok(exact_div(n * (n - 1) * (3 * n * n - 11 * n + 13), 6))
        }
        WeylFamily::I2 => {
            let m = param.unwrap();
            if m < 2 {
                return Err(Error::InvalidSpec { reason: "family I2 needs m >= 2".to_string() });
            }
            Ok(1)
        }
        WeylFamily::E6 => fixed(390),
        WeylFamily::E7 => fixed(1281),
        WeylFamily::E8 => fixed(4900),
        WeylFamily::F4 => fixed(122),
        WeylFamily::H3 => fixed(31),
        WeylFamily::H4 => fixed(722),
    }
}

/// A root-system normal vector, sparse: at most two nonzero coordinates.
type Normal = Vec<(u16, i8)>;

fn family_normals(family: WeylFamily, n: u16) -> Vec<Normal> {
    let mut out = Vec::new();
    if matches!(family, WeylFamily::B) {
        for i in 0..n {
            out.push(vec![(i, 1)]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(vec![(i, 1), (j, -1)]);
            if matches!(family, WeylFamily::B | WeylFamily::D) {
                out.push(vec![(i, 1), (j, 1)]);
            }
        }
    }
    out
}

/// Rank of up to three sparse integer rows, by fraction-free elimination
/// over the union of their supports.
fn sparse_rank(rows: &[&Normal]) -> usize {
    let mut cols: Vec<u16> = rows
        .iter()
        .flat_map(|r| r.iter().map(|&(c, _)| c))
        .collect();
    cols.sort_unstable();
    cols.dedup();
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|&c| {
                    r.iter()
                        .find(|&&(rc, _)| rc == c)
                        .map(|&(_, v)| v as i64)
                        .unwrap_or(0)
                })
                .collect()
        })
        .collect();
    let (nr, nc) = (m.len(), cols.len());
    let mut rank = 0;
    for col in 0..nc {
        let Some(pivot) = (rank..nr).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let pv = m[rank][col];
        for r in rank + 1..nr {
            let f = m[r][col];
            if f != 0 {
                for c2 in 0..nc {
                    m[r][c2] = m[r][c2] * pv - m[rank][c2] * f;
                }
            }
        }
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

/// Count rank-two flats geometrically, with no combinatorial closure
/// rules: for every pair of normals, collect all normals lying in their
/// span (rank stays two) and count the distinct collections. Supports the
/// parametrized crystallographic families only.
pub fn count_flats_by_geometry(family: WeylFamily, n: u64) -> Result<u64> {
    let min = match family {
        WeylFamily::A | WeylFamily::B => 1,
        WeylFamily::D => 2,
        _ => {
            return Err(Error::Unsupported {
                reason: format!("geometric counting covers families A, B, D, not {family}"),
            })
        }
    };
    if n < min || n > 64 {
        return Err(Error::InvalidSpec {
            reason: format!("family {family} geometry needs {min} <= n <= 64, got {n}"),
        });
    }
    let normals = family_normals(family, n as u16);
    let count = normals.len();
    let mut closures: BTreeSet<Vec<u32>> = BTreeSet::new();
    for a in 0..count {
        for b in a + 1..count {
            debug_assert_eq!(sparse_rank(&[&normals[a], &normals[b]]), 2);
            let mut closure: Vec<u32> = Vec::new();
            for (c, normal) in normals.iter().enumerate() {
                if c == a || c == b || sparse_rank(&[&normals[a], &normals[b], normal]) == 2 {
                    closure.push(c as u32);
                }
            }
            closures.insert(closure);
        }
    }
    Ok(closures.len() as u64)
}

/// Default cap on group orders for whole-group surveys.
pub const DEFAULT_ELEMENT_BUDGET: u64 = 1_000_000;

/// The conjectured lower-bound denominator: covered-flat counts over 2 in
/// type A and over 3 in type B.
pub fn lower_bound_denominator(family: Family) -> u64 {
    match family {
        Family::TypeA => 2,
        Family::TypeB => 3,
    }
}

/// Diameter versus covered-flat count for one element.
#[derive(Debug, Clone)]
pub struct ConjectureRow {
    pub element: Element,
    pub length: usize,
    pub word_count: usize,
    pub l2_size: usize,
    pub diameter: u64,
    /// `ceil(l2_size / denominator)` for the family's denominator.
    pub lower: u64,
    /// `l2_size`: the conjectured upper bound.
    pub upper: u64,
    /// `lower <= diameter <= upper`.
    pub within: bool,
    /// `diameter <= 2 * l2_size`, the proven bound.
    pub double_bound_ok: bool,
}

/// Survey outcome over a whole group.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub spec: GroupSpec,
    pub rows: Vec<ConjectureRow>,
    pub all_within: bool,
    pub all_double: bool,
    /// Smallest and largest `diameter / l2_size` over rows with flats,
    /// with the first witnessing element in row order.
    pub min_ratio: Option<(Element, f64)>,
    pub max_ratio: Option<(Element, f64)>,
}

/// Compare one element's exact graph diameter against the conjectured
/// bounds from its covered-flat count.
pub fn conjecture_row(w: &Element, word_budget: usize) -> Result<ConjectureRow> {
    let g = build_graph(w, word_budget)?;
    let exact = diameter(&g, DiameterMode::Exact)?;
    if !exact.exhaustive {
        return Err(Error::Unsupported {
            reason: format!("the graph of {w} is too large for an exact diameter"),
        });
    }
    let l2 = g.l2_size() as u64;
    let den = lower_bound_denominator(w.spec().family());
    let lower = l2.div_ceil(den);
    let upper = l2;
    Ok(ConjectureRow {
        element: w.clone(),
        length: w.length(),
        word_count: g.vertex_count(),
        l2_size: g.l2_size(),
        diameter: exact.value,
        lower,
        upper,
        within: lower <= exact.value && exact.value <= upper,
        double_bound_ok: exact.value <= 2 * l2,
    })
}

/// Combine per-element rows (already in a deterministic order) into a
/// report with the extremal diameter-to-flat ratios.
pub fn assemble_report(spec: GroupSpec, rows: Vec<ConjectureRow>) -> ConjectureReport {
    let all_within = rows.iter().all(|r| r.within);
    let all_double = rows.iter().all(|r| r.double_bound_ok);
    let mut min_ratio: Option<(Element, f64)> = None;
    let mut max_ratio: Option<(Element, f64)> = None;
    for row in &rows {
        if row.l2_size == 0 {
            continue;
        }
        let ratio = row.diameter as f64 / row.l2_size as f64;
        if min_ratio.as_ref().is_none_or(|(_, best)| ratio < *best) {
            min_ratio = Some((row.element.clone(), ratio));
        }
        if max_ratio.as_ref().is_none_or(|(_, best)| ratio > *best) {
            max_ratio = Some((row.element.clone(), ratio));
        }
    }
    ConjectureReport { spec, rows, all_within, all_double, min_ratio, max_ratio }
}

/// Sweep every element of the group: enumerate its words, compute the
/// exact diameter, and compare against the conjectured bounds.
///
/// `element_budget` caps the group order and `word_budget` each element's
/// word count; exceeding either is an error, naming the culprit.
pub fn conjecture_check(
    spec: GroupSpec,
    word_budget: usize,
    element_budget: u64,
) -> Result<ConjectureReport> {
    let order = spec.checked_order().unwrap_or(u64::MAX);
    if order > element_budget {
        return Err(Error::BudgetExceeded {
            what: format!("the group order of {spec}"),
            budget: element_budget as usize,
        });
    }
    let rows = spec
        .elements()
        .iter()
        .map(|w| conjecture_row(w, word_budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_report(spec, rows))
}
