//! Operadic insertions for one- and two-coloured graph operads.

use num::One;

use crate::error::{Error, Result};
use crate::graph_core::{Colour, Graph, GraphVector, Q};

/// Provenance of an insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionResult {
    pub vector: GraphVector,
    pub host: String,
    pub slot: usize,
    pub guest: String,
}

/// Vertex relabelling for an insertion: host vertices (slot excluded) and guest vertices
/// into the result, plus the result shape.
struct Layout {
    colour: Colour,
    whites: usize,
    blacks: usize,
    host_map: Vec<usize>,
    guest_map: Vec<usize>,
}

fn layout(host: &Graph, slot: usize, guest: &Graph) -> Result<Layout> {
    let (mh, nh) = (host.m(), host.n());
    let (mg, ng) = (guest.m(), guest.n());
    if slot >= host.n_vertices() {
        return Err(Error::IllegalComposition(format!("slot {slot} not in host")));
    }
    const NONE: usize = usize::MAX;
    match (host.colour, guest.colour) {
        (Colour::One, Colour::One) => {
            let nr = nh - 1 + ng;
            let host_map = (0..nh)
                .map(|v| if v == slot { NONE } else if v < slot { v } else { v - 1 })
                .collect();
            let guest_map = (0..ng).map(|k| nh - 1 + k).collect();
            Ok(Layout { colour: Colour::One, whites: 0, blacks: nr, host_map, guest_map })
        }
        (hc, gc) if hc != Colour::One && gc != Colour::One && host.is_white(slot) => {
            let mr = mh - 1 + mg;
            let host_map = (0..mh + nh)
                .map(|v| {
                    if v == slot {
                        NONE
                    } else if v < slot {
                        v
                    } else if v < mh {
                        v - 1 + mg
                    } else {
                        mr + (v - mh)
                    }
                })
                .collect();
            let guest_map =
                (0..mg + ng).map(|k| if k < mg { slot + k } else { mr + nh + (k - mg) }).collect();
            Ok(Layout { colour: hc, whites: mr, blacks: nh + ng, host_map, guest_map })
        }
        (hc, Colour::One) if hc != Colour::One && !host.is_white(slot) => {
            let nr = nh - 1 + ng;
            let host_map = (0..mh + nh)
                .map(|v| if v == slot { NONE } else if v < slot { v } else { v - 1 })
                .collect();
            let guest_map = (0..ng).map(|k| mh + nh - 1 + k).collect();
            Ok(Layout { colour: hc, whites: mh, blacks: nr, host_map, guest_map })
        }
        _ => Err(Error::IllegalComposition(format!(
            "{} host slot {} with {} guest",
            host.colour.tag(),
            host.vertex_name(slot),
            guest.colour.tag()
        ))),
    }
}

/// Emits every raw term of `host ∘_slot guest`: host edges (endpoints at the slot
/// reattached to guest vertices) followed by guest edges.
pub fn compose_raw(host: &Graph, slot: usize, guest: &Graph, mut emit: impl FnMut(Graph)) -> Result<()> {
    let lay = layout(host, slot, guest)?;
    let ng = guest.n_vertices();
    let at_slot: Vec<usize> = host
        .edges
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| u as usize == slot || v as usize == slot)
        .map(|(i, _)| i)
        .collect();
    if ng == 0 && !at_slot.is_empty() {
        return Ok(());
    }
    let mut base: Vec<(u8, u8)> = Vec::with_capacity(host.edges.len() + guest.edges.len());
    for &(u, v) in &host.edges {
        let mu = lay.host_map[u as usize];
        let mv = lay.host_map[v as usize];
        base.push((if mu == usize::MAX { 0 } else { mu as u8 }, if mv == usize::MAX { 0 } else { mv as u8 }));
    }
    for &(u, v) in &guest.edges {
        base.push((lay.guest_map[u as usize] as u8, lay.guest_map[v as usize] as u8));
    }
    let k = at_slot.len();
    let mut choice = vec![0usize; k];
    loop {
        let mut edges = base.clone();
        for (j, &ei) in at_slot.iter().enumerate() {
            let (u, v) = host.edges[ei];
            let g = lay.guest_map[choice[j]] as u8;
            edges[ei] = if u as usize == slot {
                (g, lay.host_map[v as usize] as u8)
            } else {
                (lay.host_map[u as usize] as u8, g)
            };
        }
        emit(Graph { colour: lay.colour, whites: lay.whites as u8, blacks: lay.blacks as u8, edges });
        // next assignment
        let mut j = 0;
        loop {
            if j == k {
                return Ok(());
            }
            choice[j] += 1;
            if choice[j] < ng {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// `host ∘_slot guest`, canonicalized.
pub fn insert(host: &Graph, slot: usize, guest: &Graph) -> Result<GraphVector> {
    host.validate()?;
    guest.validate()?;
    let mut out = GraphVector::new();
    let one = Q::one();
    compose_raw(host, slot, guest, |g| out.add_raw_unchecked(&g, &one))?;
    Ok(out)
}

/// [`insert`] with provenance.
pub fn insert_with_provenance(host: &Graph, slot: usize, guest: &Graph) -> Result<InsertionResult> {
    Ok(InsertionResult { vector: insert(host, slot, guest)?, host: host.key(), slot, guest: guest.key() })
}

/// Σ over black vertices v of host of host ∘_v γ, extended bilinearly.
pub fn act_on_blacks(host: &GraphVector, gamma: &GraphVector) -> Result<GraphVector> {
    let mut out = GraphVector::new();
    for (h, a) in host.iter() {
        if h.colour == Colour::One {
            return Err(Error::ColourMismatch("act_on_blacks needs a two-coloured host".into()));
        }
        for (g, b) in gamma.iter() {
            if g.colour != Colour::One {
                return Err(Error::ColourMismatch("act_on_blacks needs a one-coloured guest".into()));
            }
            let c = a * b;
            for v in h.m()..h.n_vertices() {
                compose_raw(h, v, g, |t| out.add_raw_unchecked(&t, &c))?;
            }
        }
    }
    Ok(out)
}

/// Σ over all vertices v of x ∘_v y for one-coloured vectors (the pre-Lie product).
pub fn pre_lie(x: &GraphVector, y: &GraphVector) -> Result<GraphVector> {
    let mut out = GraphVector::new();
    for (h, a) in x.iter() {
        for (g, b) in y.iter() {
            if h.colour != Colour::One || g.colour != Colour::One {
                return Err(Error::ColourMismatch("pre-Lie product needs one-coloured graphs".into()));
            }
            let c = a * b;
            for v in 0..h.n_vertices() {
                compose_raw(h, v, g, |t| out.add_raw_unchecked(&t, &c))?;
            }
        }
    }
    Ok(out)
}
