//! Exact nonnegative vertex weights.
//!
//! Weights are parsed as rationals and rescaled to a common denominator, so
//! every DP adds and compares plain `i128` values.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use num_integer::Integer;
use std::fmt;
use std::str::FromStr;

/// A nonnegative rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub num: i128,
    pub den: i128,
}

impl Ratio {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den <= 0 {
            return Err(Error::input(format!("nonpositive denominator {den}")));
        }
        if num < 0 {
            return Err(Error::input(format!("negative weight {num}/{den}")));
        }
        let g = num.gcd(&den).max(1);
        Ok(Ratio { num: num / g, den: den / g })
    }

    pub fn integer(num: i128) -> Self {
        Ratio { num, den: 1 }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim().parse::<i128>().map_err(|_| Error::input(format!("bad rational '{s}'")))
        };
        match s.split_once('/') {
            Some((n, d)) => Ratio::new(parse(n)?, parse(d)?),
            None => Ratio::new(parse(s)?, 1),
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Per-vertex weights scaled by a shared denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    scaled: Vec<i128>,
    den: i128,
}

impl WeightMap {
    pub fn unit(n: usize) -> Self {
        WeightMap { scaled: vec![1; n], den: 1 }
    }

    pub fn from_integers(ws: &[i128]) -> Result<Self> {
        if let Some(w) = ws.iter().find(|&&w| w < 0) {
            return Err(Error::input(format!("negative weight {w}")));
        }
        Ok(WeightMap { scaled: ws.to_vec(), den: 1 })
    }

    pub fn from_ratios(ws: &[Ratio]) -> Result<Self> {
        let mut den: i128 = 1;
        for r in ws {
            den = den
                .checked_div(den.gcd(&r.den))
                .and_then(|d| d.checked_mul(r.den))
                .ok_or_else(|| Error::input("weight denominators overflow"))?;
        }
        let scaled = ws
            .iter()
            .map(|r| r.num.checked_mul(den / r.den).ok_or_else(|| Error::input("weight overflow")))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightMap { scaled, den })
    }

    pub fn len(&self) -> usize {
        self.scaled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scaled.is_empty()
    }

    /// Scaled weight of one vertex.
    #[inline]
    pub fn get(&self, v: usize) -> i128 {
        self.scaled[v]
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn ratio(&self, v: usize) -> Ratio {
        self.to_ratio(self.scaled[v])
    }

    /// Scaled weight of a set.
    pub fn of(&self, s: &VertexSet) -> i128 {
        s.iter().map(|v| self.scaled[v]).sum()
    }

    /// Turns a scaled total back into a reduced rational.
    pub fn to_ratio(&self, scaled: i128) -> Ratio {
        let g = scaled.gcd(&self.den).max(1);
        Ratio { num: scaled / g, den: self.den / g }
    }

    /// Restriction to `keep`, in the order given.
    pub fn restrict(&self, keep: &[usize]) -> WeightMap {
        WeightMap { scaled: keep.iter().map(|&v| self.scaled[v]).collect(), den: self.den }
    }

    /// Multiplies every weight by `factor` (used by rescaling checks).
    pub fn scaled_by(&self, factor: i128) -> WeightMap {
        WeightMap { scaled: self.scaled.iter().map(|w| w * factor).collect(), den: self.den }
    }
}
