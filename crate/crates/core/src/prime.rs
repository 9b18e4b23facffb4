use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime number, used as the runner count of an abacus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Prime(usize);

impl Prime {
    pub fn new(p: usize) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }
}

/// Trial division; the primes used here are small.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl TryFrom<usize> for Prime {
    type Error = Error;

    fn try_from(p: usize) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for usize {
    fn from(p: Prime) -> usize {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
