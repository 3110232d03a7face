use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;

use super::{Colour, Graph};
use crate::error::{Error, Result};

/// Basis constraints for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Constraints {
    /// Minimum valence of black vertices (all vertices for one colour).
    pub min_black_valence: usize,
    pub connected: bool,
    /// Every component must contain a white vertex.
    pub no_black_components: bool,
}

impl Constraints {
    pub const NONE: Constraints =
        Constraints { min_black_valence: 0, connected: false, no_black_components: false };
    /// Connected, at least trivalent.
    pub const GC2: Constraints =
        Constraints { min_black_valence: 3, connected: true, no_black_components: false };
    /// At least trivalent blacks.
    pub const TRIVALENT: Constraints =
        Constraints { min_black_valence: 3, connected: false, no_black_components: false };

    pub fn admits(&self, g: &Graph) -> bool {
        if self.min_black_valence > 0 {
            if let Some(v) = g.min_black_valence() {
                if v < self.min_black_valence {
                    return false;
                }
            }
        }
        if self.connected && g.n_vertices() > 0 && !g.is_connected() {
            return false;
        }
        if self.no_black_components && !g.no_black_components() {
            return false;
        }
        true
    }
}

/// Resource guard for enumeration.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_candidates: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_vertices: 9, max_candidates: 20_000_000 }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

type CacheKey = (Colour, usize, usize, usize, Constraints);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All nonzero canonical classes with `m` whites, `n` blacks and `l` edges satisfying
/// the constraints, sorted by text key.
pub fn enumerate(
    colour: Colour,
    m: usize,
    n: usize,
    l: usize,
    cons: Constraints,
    budget: Budget,
) -> Result<Arc<Vec<Graph>>> {
    let m = if colour == Colour::One { 0 } else { m };
    let nv = m + n;
    if nv > budget.max_vertices {
        return Err(Error::ResourceCap(format!("{nv} vertices exceeds cap {}", budget.max_vertices)));
    }
    let slots = nv * nv.saturating_sub(1) / 2;
    if l > slots {
        return Ok(Arc::new(Vec::new()));
    }
    let cand = binomial(slots as u64, l as u64);
    if cand > budget.max_candidates {
        return Err(Error::ResourceCap(format!("{cand} candidate edge sets")));
    }
    let ck = (colour, m, n, l, cons);
    if let Some(hit) = cache().lock().unwrap().get(&ck) {
        return Ok(hit.clone());
    }
    let pairs: Vec<(u8, u8)> =
        (0..nv).tuple_combinations().map(|(u, v)| (u as u8, v as u8)).collect();
    let mut found: BTreeSet<Graph> = BTreeSet::new();
    let mut deg = vec![0usize; nv];
    for combo in pairs.iter().copied().combinations(l) {
        deg.iter_mut().for_each(|d| *d = 0);
        for &(u, v) in &combo {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        if cons.min_black_valence > 0 && deg[m..].iter().any(|&d| d < cons.min_black_valence) {
            continue;
        }
        let g = Graph::new(colour, m, n, combo);
        if !cons.admits(&g) {
            continue;
        }
        if let Some((k, _)) = g.canon_unchecked() {
            found.insert(k);
        }
    }
    let mut out: Vec<Graph> = found.into_iter().collect();
    out.sort_by_cached_key(|g| g.key());
    let out = Arc::new(out);
    cache().lock().unwrap().insert(ck, out.clone());
    Ok(out)
}
