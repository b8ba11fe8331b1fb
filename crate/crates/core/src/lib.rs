//! Exact verification of real character degree sums of `GL(n,q)` and `U(n,q)`.
//!
//! Everything is exact: rational functions in a formal `q`, truncated power
//! series in a second formal variable `u`, and brute-force finite-field
//! oracles at small `q`. See the `book/` directory for a guided tour.

pub mod chars;
pub mod error;
pub mod exact;
pub mod groups;
pub mod hl;
pub mod partitions;
pub mod polycount;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};

use serde::{Deserialize, Serialize};

/// Parity of the characteristic of `F_q`.
///
/// Even characteristic has one self-dual linear class (`t - 1`), odd has two
/// (`t - 1`, `t + 1`); this count is `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `e = 1` for even characteristic, `e = 2` for odd.
    pub fn e(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => 2,
        }
    }

    pub fn of(q: u64) -> Parity {
        if q % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" | "1" => Ok(Parity::Even),
            "odd" | "2" => Ok(Parity::Odd),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}

/// Which family of groups or polynomial classes is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Gl,
    U,
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Flavor::Gl => "gl",
            Flavor::U => "u",
        })
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" | "GL" => Ok(Flavor::Gl),
            "u" | "U" => Ok(Flavor::U),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}
