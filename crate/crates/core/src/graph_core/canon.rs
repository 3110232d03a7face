//! Canonical labelling by individualization-refinement with signed edge orders.

use super::Colour;

struct Search {
    nv: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    best: Option<(Vec<(u8, u8)>, bool)>,
    zero: bool,
}

fn rank_by<T: Ord + Clone>(sigs: &[T]) -> (Vec<u32>, usize) {
    let mut sorted = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    let cols = sigs.iter().map(|s| sorted.binary_search(s).unwrap() as u32).collect();
    (cols, sorted.len())
}

impl Search {
    fn refine(&self, colours: &mut Vec<u32>) {
        let mut ncol = {
            let mut c = colours.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..self.nv)
                .map(|v| {
                    let mut nb: Vec<u32> = self.adj[v].iter().map(|&u| colours[u]).collect();
                    nb.sort_unstable();
                    (colours[v], nb)
                })
                .collect();
            let (next, k) = rank_by(&sigs);
            *colours = next;
            if k == ncol {
                break;
            }
            ncol = k;
        }
    }

    fn leaf(&mut self, labels: &[u32]) {
        let mut mapped: Vec<(u8, u8)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (labels[u] as u8, labels[v] as u8);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        // insertion sort, counting transpositions
        let mut odd = false;
        for i in 1..mapped.len() {
            let mut j = i;
            while j > 0 && mapped[j - 1] > mapped[j] {
                mapped.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        match &self.best {
            None => self.best = Some((mapped, odd)),
            Some((key, par)) => match mapped.cmp(key) {
                std::cmp::Ordering::Less => self.best = Some((mapped, odd)),
                std::cmp::Ordering::Equal => {
                    if *par != odd {
                        self.zero = true;
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    fn search(&mut self, colours: Vec<u32>) {
        if self.zero {
            return;
        }
        let mut counts = vec![0usize; self.nv];
        for &c in &colours {
            counts[c as usize] += 1;
        }
        match (0..self.nv).find(|&c| counts[c] > 1) {
            None => self.leaf(&colours),
            Some(cell) => {
                let cell = cell as u32;
                let members: Vec<usize> = (0..self.nv).filter(|&v| colours[v] == cell).collect();
                for &v in &members {
                    let mut next: Vec<u32> = colours
                        .iter()
                        .enumerate()
                        .map(|(u, &c)| 2 * c + u32::from(c == cell && u != v))
                        .collect();
                    self.refine(&mut next);
                    self.search(next);
                    if self.zero {
                        return;
                    }
                }
            }
        }
    }
}

/// Sorted canonical edge list and the parity of the edge permutation, or `None` for Zero.
///
/// Inputs must be validated (in range, no tadpoles).
pub(crate) fn canonical_edges(
    colour: Colour,
    m: usize,
    n: usize,
    edges: &[(u8, u8)],
) -> Option<(Vec<(u8, u8)>, bool)> {
    let nv = m + n;
    let mut adj = vec![Vec::new(); nv];
    let mut pairs = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        let (u, v) = (u as usize, v as usize);
        let p = if u < v { (u, v) } else { (v, u) };
        if pairs.contains(&p) {
            // the swap of two parallel edges is an odd automorphism
            return None;
        }
        pairs.push(p);
        adj[u].push(v);
        adj[v].push(u);
    }
    let init: Vec<(u8, usize, usize)> = (0..nv)
        .map(|v| match colour {
            Colour::One => (1, 0, adj[v].len()),
            Colour::Ordered if v < m => (0, v, 0),
            Colour::Symmetric if v < m => (0, 0, adj[v].len()),
            _ => (1, 0, adj[v].len()),
        })
        .collect();
    let mut s = Search { nv, adj, edges: pairs, best: None, zero: false };
    let (mut colours, _) = rank_by(&init);
    s.refine(&mut colours);
    s.search(colours);
    if s.zero {
        return None;
    }
    s.best
}
