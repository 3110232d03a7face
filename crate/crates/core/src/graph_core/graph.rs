use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Colour specification of a graph family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Colour {
    /// One colour; every vertex is symmetrized.
    #[serde(rename = "one")]
    One,
    /// Two colours; whites form an ordered sequence, blacks are symmetrized.
    #[serde(rename = "ord")]
    Ordered,
    /// Two colours; whites and blacks are symmetrized separately.
    #[serde(rename = "sym")]
    Symmetric,
}

impl Colour {
    pub fn tag(self) -> &'static str {
        match self {
            Colour::One => "one",
            Colour::Ordered => "ord",
            Colour::Symmetric => "sym",
        }
    }

    pub fn from_tag(s: &str) -> Result<Colour> {
        match s {
            "one" => Ok(Colour::One),
            "ord" => Ok(Colour::Ordered),
            "sym" => Ok(Colour::Symmetric),
            _ => Err(Error::Parse(format!("unknown colour spec '{s}'"))),
        }
    }
}

/// A graph with an ordered edge list. Vertices `0..whites` are white, the rest black.
///
/// As a stored key the edge list is sorted with `u < v`; as a raw term the order of
/// `edges` is the orientation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    pub colour: Colour,
    pub whites: u8,
    pub blacks: u8,
    pub edges: Vec<(u8, u8)>,
}

impl Graph {
    pub fn new(colour: Colour, whites: usize, blacks: usize, edges: Vec<(u8, u8)>) -> Graph {
        let whites = if colour == Colour::One { 0 } else { whites };
        Graph { colour, whites: whites as u8, blacks: blacks as u8, edges }
    }

    /// One-coloured graph on `n` vertices.
    pub fn one(n: usize, edges: &[(u8, u8)]) -> Graph {
        Graph::new(Colour::One, 0, n, edges.to_vec())
    }

    /// Two-coloured graph with ordered whites.
    pub fn ord(m: usize, n: usize, edges: &[(u8, u8)]) -> Graph {
        Graph::new(Colour::Ordered, m, n, edges.to_vec())
    }

    pub fn n_vertices(&self) -> usize {
        self.whites as usize + self.blacks as usize
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn m(&self) -> usize {
        self.whites as usize
    }

    pub fn n(&self) -> usize {
        self.blacks as usize
    }

    pub fn is_white(&self, v: usize) -> bool {
        v < self.whites as usize
    }

    pub fn bigrade(&self) -> (usize, usize, usize) {
        (self.m(), self.n(), self.n_edges())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n_vertices()];
        for &(u, v) in &self.edges {
            d[u as usize] += 1;
            d[v as usize] += 1;
        }
        d
    }

    pub fn min_black_valence(&self) -> Option<usize> {
        let d = self.degrees();
        (self.m()..self.n_vertices()).map(|v| d[v]).min()
    }

    /// Component index for every vertex.
    pub fn components(&self) -> Vec<usize> {
        let nv = self.n_vertices();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for &(u, v) in &self.edges {
            let a = find(&mut parent, u as usize);
            let b = find(&mut parent, v as usize);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..nv).map(|v| find(&mut parent, v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let c = self.components();
        c.iter().all(|&x| x == 0)
    }

    /// True when every connected component contains a white vertex.
    pub fn no_black_components(&self) -> bool {
        let c = self.components();
        let m = self.m();
        (m..self.n_vertices()).all(|v| c[..m].contains(&c[v]))
    }

    pub fn validate(&self) -> Result<()> {
        let nv = self.n_vertices();
        for &(u, v) in &self.edges {
            let (u, v) = (u as usize, v as usize);
            if u >= nv {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= nv {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::Tadpole(u));
            }
        }
        Ok(())
    }

    /// Canonical representative and sign, or `None` when the class vanishes.
    pub fn canonicalize(&self) -> Result<Option<(Graph, i32)>> {
        self.validate()?;
        Ok(self.canon_unchecked())
    }

    pub(crate) fn canon_unchecked(&self) -> Option<(Graph, i32)> {
        let (edges, odd) =
            super::canon::canonical_edges(self.colour, self.m(), self.n(), &self.edges)?;
        let g = Graph { colour: self.colour, whites: self.whites, blacks: self.blacks, edges };
        Some((g, if odd { -1 } else { 1 }))
    }

    pub fn vertex_name(&self, v: usize) -> String {
        if self.is_white(v) {
            format!("w{}", v + 1)
        } else {
            format!("b{}", v - self.m() + 1)
        }
    }

    /// Canonical text key `c:<colour>;v:<m>,<n>;e:(a,b)...`.
    pub fn key(&self) -> String {
        let mut s = format!("c:{};v:{},{};e:", self.colour.tag(), self.whites, self.blacks);
        for &(u, v) in &self.edges {
            s.push('(');
            s.push_str(&self.vertex_name(u as usize));
            s.push(',');
            s.push_str(&self.vertex_name(v as usize));
            s.push(')');
        }
        s
    }

    fn parse_vertex(name: &str, m: usize, n: usize) -> Result<u8> {
        let bad = || Error::Parse(format!("bad vertex name '{name}'"));
        let (kind, rest) = name.split_at(1.min(name.len()));
        let idx: usize = rest.trim().parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match kind {
            "w" if idx <= m => Ok((idx - 1) as u8),
            "b" if idx <= n => Ok((m + idx - 1) as u8),
            "w" | "b" => Err(Error::VertexOutOfRange(idx)),
            _ => Err(bad()),
        }
    }

    /// Parses a text key. The edge order is kept, so non-canonical input is allowed.
    pub fn from_key(key: &str) -> Result<Graph> {
        let bad = || Error::Parse(format!("bad graph key '{key}'"));
        let mut colour = None;
        let mut counts = None;
        let mut edge_str = "";
        for part in key.trim().split(';') {
            if let Some(c) = part.strip_prefix("c:") {
                colour = Some(Colour::from_tag(c)?);
            } else if let Some(v) = part.strip_prefix("v:") {
                let mut it = v.split(',');
                let m: usize = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
                let n: usize = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
                counts = Some((m, n));
            } else if let Some(e) = part.strip_prefix("e:") {
                edge_str = e;
            } else if !part.is_empty() {
                return Err(bad());
            }
        }
        let colour = colour.ok_or_else(bad)?;
        let (m, n) = counts.ok_or_else(bad)?;
        if colour == Colour::One && m != 0 {
            return Err(bad());
        }
        let mut edges = Vec::new();
        for chunk in edge_str.split(')') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let inner = chunk.strip_prefix('(').ok_or_else(bad)?;
            let mut it = inner.split(',');
            let a = Self::parse_vertex(it.next().ok_or_else(bad)?.trim(), m, n)?;
            let b = Self::parse_vertex(it.next().ok_or_else(bad)?.trim(), m, n)?;
            edges.push((a, b));
        }
        let g = Graph::new(colour, m, n, edges);
        g.validate()?;
        Ok(g)
    }

    pub fn to_json(&self, coeff: &super::Q) -> serde_json::Value {
        let edges: Vec<Vec<String>> = self
            .edges
            .iter()
            .map(|&(u, v)| vec![self.vertex_name(u as usize), self.vertex_name(v as usize)])
            .collect();
        serde_json::json!({
            "colour": self.colour.tag(),
            "whites": self.whites,
            "blacks": self.blacks,
            "edges": edges,
            "coeff": coeff.to_string(),
        })
    }

    /// Reads a JSON term; edges may be vertex names or 1-based indices (whites first).
    pub fn from_json(v: &serde_json::Value) -> Result<(Graph, super::Q)> {
        let bad = |s: &str| Error::Parse(format!("json term: {s}"));
        let colour = Colour::from_tag(v["colour"].as_str().ok_or_else(|| bad("colour"))?)?;
        let m = v["whites"].as_u64().unwrap_or(0) as usize;
        let n = v["blacks"].as_u64().ok_or_else(|| bad("blacks"))? as usize;
        let mut edges = Vec::new();
        for e in v["edges"].as_array().ok_or_else(|| bad("edges"))? {
            let pair = e.as_array().ok_or_else(|| bad("edge"))?;
            if pair.len() != 2 {
                return Err(bad("edge arity"));
            }
            let mut ends = [0u8; 2];
            for (k, x) in pair.iter().enumerate() {
                ends[k] = match x {
                    serde_json::Value::String(s) => Self::parse_vertex(s, m, n)?,
                    serde_json::Value::Number(num) => {
                        let i = num.as_u64().ok_or_else(|| bad("index"))? as usize;
                        if i == 0 || i > m + n {
                            return Err(Error::VertexOutOfRange(i));
                        }
                        (i - 1) as u8
                    }
                    _ => return Err(bad("vertex")),
                };
            }
            edges.push((ends[0], ends[1]));
        }
        let coeff = match &v["coeff"] {
            serde_json::Value::Null => super::Q::from_integer(1.into()),
            serde_json::Value::String(s) => super::parse_q(s)?,
            serde_json::Value::Number(x) => super::parse_q(&x.to_string())?,
            _ => return Err(bad("coeff")),
        };
        let g = Graph::new(colour, m, n, edges);
        g.validate()?;
        Ok((g, coeff))
    }

    /// Relabels vertices by `perm` (old -> new), keeping the edge order.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u as usize] as u8, perm[v as usize] as u8)).collect();
        Graph { edges, ..self.clone() }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}
