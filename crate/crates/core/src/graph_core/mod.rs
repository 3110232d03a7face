//! Canonical representation, enumeration and exact linear combinations of graphs.

mod canon;
mod enumerate;
mod graph;
mod vector;

pub use enumerate::{enumerate, Budget, Constraints};
pub use graph::{Colour, Graph};
pub use vector::GraphVector;

use crate::error::{Error, Result};

pub type Q = num::BigRational;

/// Parses `p`, `p/q` or a finite decimal into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let p: num::BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: num::BigInt = q.trim().parse().map_err(|_| bad())?;
        if q == num::BigInt::from(0) {
            return Err(bad());
        }
        return Ok(Q::new(p, q));
    }
    if let Some((a, b)) = s.split_once('.') {
        let digits = format!("{a}{b}");
        let p: num::BigInt = digits.parse().map_err(|_| bad())?;
        let q = num::BigInt::from(10).pow(b.len() as u32);
        return Ok(Q::new(p, q));
    }
    let p: num::BigInt = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(p))
}

pub fn q(p: i64, d: i64) -> Q {
    Q::new(p.into(), d.into())
}

pub fn qi(p: i64) -> Q {
    Q::from_integer(p.into())
}
