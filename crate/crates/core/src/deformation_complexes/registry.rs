//! Named complexes, their graded bases and differentials on basis keys.

use std::fmt;
use std::str::FromStr;

use super::def::degree_def;
use super::gc::degree_gc;
use super::mac::{delta_def_key, delta_gc_key, willwacher_key, MacElement};
use crate::error::{Error, Result};
use crate::graph_core::{enumerate, Budget, Colour, Constraints, Graph};

/// Def-complex basis constraint for Graphs: at least trivalent blacks, no all-black components.
pub const GRAPHS: Constraints = Constraints { min_black_valence: 3, connected: false, no_black_components: true };

/// Ambient space for the ideal I'_••: blacks of valence ≥ 1, no all-black components.
pub const GRAPHS_ALL_VALENCE: Constraints =
    Constraints { min_black_valence: 1, connected: false, no_black_components: true };

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplexId {
    Fgc2,
    Gc2,
    DefAssFgraphs,
    DefAssGraphs,
    DefAssGraphsQuot,
    Mac,
    MacQuot,
}

impl ComplexId {
    pub const ALL: [ComplexId; 7] = [
        ComplexId::Fgc2,
        ComplexId::Gc2,
        ComplexId::DefAssFgraphs,
        ComplexId::DefAssGraphs,
        ComplexId::DefAssGraphsQuot,
        ComplexId::Mac,
        ComplexId::MacQuot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ComplexId::Fgc2 => "fgc2",
            ComplexId::Gc2 => "gc2",
            ComplexId::DefAssFgraphs => "def_ass_fgraphs",
            ComplexId::DefAssGraphs => "def_ass_graphs",
            ComplexId::DefAssGraphsQuot => "def_ass_graphs_quot",
            ComplexId::Mac => "mac",
            ComplexId::MacQuot => "mac_quot",
        }
    }

    pub fn is_quotient(self) -> bool {
        matches!(self, ComplexId::DefAssGraphsQuot | ComplexId::MacQuot)
    }

    fn is_gc(self) -> bool {
        matches!(self, ComplexId::Fgc2 | ComplexId::Gc2)
    }

    fn has_gc_part(self) -> bool {
        matches!(self, ComplexId::Fgc2 | ComplexId::Gc2 | ComplexId::Mac | ComplexId::MacQuot)
    }

    fn has_def_part(self) -> bool {
        !self.is_gc()
    }

    fn def_constraints(self) -> Constraints {
        match self {
            ComplexId::DefAssFgraphs => Constraints::TRIVALENT,
            _ => GRAPHS,
        }
    }

    fn gc_constraints(self) -> Constraints {
        match self {
            ComplexId::Fgc2 => Constraints::NONE,
            _ => Constraints::GC2,
        }
    }

    /// (degree, k) of a basis key, where k is the grading preserved by the differential.
    pub fn grade(self, g: &Graph) -> (i64, i64) {
        let (n, l) = (g.n() as i64, g.n_edges() as i64);
        if g.colour == Colour::One {
            let k = if self.is_gc() { l - n } else { l - n + 1 };
            (degree_gc(g), k)
        } else {
            (degree_def(g), l - n)
        }
    }

    /// Bigrades (m, n, l) making up the block of the given degree and k.
    pub fn bigrades_at(self, degree: i64, k: i64) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        if self.has_def_part() {
            let total = degree + k + 1;
            for m in 1..=total.max(0) {
                let n = total - m;
                let l = n + k;
                if n >= 0 && l >= 0 {
                    out.push((m as usize, n as usize, l as usize));
                }
            }
        }
        if self.has_gc_part() {
            let (n, l) = if self.is_gc() {
                let n = degree + k + 2;
                (n, n + k)
            } else {
                let n = degree + k + 1;
                (n, n + k - 1)
            };
            if n >= 1 && l >= 0 {
                out.push((0, n as usize, l as usize));
            }
        }
        out
    }

    /// Largest vertex count of the block at (degree, k).
    pub fn block_vertices(self, degree: i64, k: i64) -> i64 {
        if self.is_gc() {
            degree + k + 2
        } else {
            degree + k + 1
        }
    }

    /// Canonical basis of one bigrade; `m = 0` selects the one-coloured part.
    pub fn basis(self, bigrade: (usize, usize, usize), budget: Budget) -> Result<Vec<Graph>> {
        let (m, n, l) = bigrade;
        if m == 0 {
            if !self.has_gc_part() || n == 0 {
                return Ok(Vec::new());
            }
            Ok(enumerate(Colour::One, 0, n, l, self.gc_constraints(), budget)?.to_vec())
        } else {
            if !self.has_def_part() {
                return Ok(Vec::new());
            }
            Ok(enumerate(Colour::Ordered, m, n, l, self.def_constraints(), budget)?.to_vec())
        }
    }

    /// Target bigrades of the differential out of `bigrade`.
    pub fn target_bigrades(self, bigrade: (usize, usize, usize)) -> Vec<(usize, usize, usize)> {
        let (m, n, l) = bigrade;
        if m == 0 {
            let mut t = vec![(0, n + 1, l + 1)];
            if !self.is_gc() {
                t.insert(0, (1, n, l + 1));
            }
            t
        } else {
            vec![(m + 1, n, l), (m, n + 1, l + 1)]
        }
    }

    /// The differential of a single basis key.
    pub fn d_key(self, g: &Graph) -> MacElement {
        if g.colour == Colour::One {
            let gc = delta_gc_key(g);
            let def = if self.is_gc() { Default::default() } else { willwacher_key(g) };
            MacElement { def, gc }
        } else {
            MacElement::from_def(delta_def_key(g))
        }
    }
}

impl fmt::Display for ComplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComplexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ComplexId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown complex '{s}'")))
    }
}
