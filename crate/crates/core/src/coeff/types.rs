use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The exponent sign `eps` in `prod (1 - x^d)^{eps mu(n/d)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidArgument(format!("sign must be +1 or -1, got {v}"))),
        }
    }

    /// `self * (-1)^count`.
    pub fn flip_by(self, count: usize) -> Self {
        if count % 2 == 0 {
            self
        } else {
            -self
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i64())
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "+1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidArgument(format!("sign must be +1 or -1, got {other:?}"))),
        }
    }
}

/// The address `(n, k, eps)` of one coefficient `a_n^eps(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoeffQuery {
    pub n: u64,
    pub k: u64,
    pub eps: Sign,
}

impl CoeffQuery {
    pub fn new(n: u64, k: u64, eps: Sign) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(CoeffQuery { n, k, eps })
    }
}

/// `a_n^eps(0..=K)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffSeries {
    pub n: u64,
    pub eps: Sign,
    pub values: Vec<i64>,
}

/// The independent coefficient engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Truncated product of `(1 - x^d)^{+-1}`.
    Naive,
    /// Logarithmic-derivative recursion driven by Ramanujan sums.
    Gt,
    /// Sum over the partitions of `k`.
    Partition,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Naive, Engine::Gt, Engine::Partition];
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Engine::Naive),
            "gt" => Ok(Engine::Gt),
            "partition" => Ok(Engine::Partition),
            other => Err(Error::InvalidArgument(format!("unknown engine {other:?}"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Naive => "naive",
            Engine::Gt => "gt",
            Engine::Partition => "partition",
        })
    }
}
