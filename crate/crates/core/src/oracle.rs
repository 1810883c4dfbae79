//! Charged read access to an input word, optionally viewed through the
//! padding `1^k · x · 0^k`.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::word::Word;

/// Read access to a (possibly padded) word with a monotone query counter.
///
/// Only reads that land in the base word are charged; the padding is known
/// to the caller and costs nothing. Repeated reads of the same index are
/// charged every time.
#[derive(Debug, Clone)]
pub struct CountingOracle {
    base: Word,
    pad: usize,
    charged: Cell<u64>,
}

impl CountingOracle {
    pub fn new(base: Word) -> Self {
        Self::padded(base, 0)
    }

    pub fn padded(base: Word, pad: usize) -> Self {
        CountingOracle {
            base,
            pad,
            charged: Cell::new(0),
        }
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    pub fn pad(&self) -> usize {
        self.pad
    }

    /// `n + 2 · pad`.
    pub fn effective_len(&self) -> usize {
        self.base.len() + 2 * self.pad
    }

    /// Bit at index `i` of the padded view; `true` is a closing symbol.
    pub fn read(&self, i: usize) -> Result<bool> {
        let len = self.effective_len();
        if i >= len {
            return Err(Error::OutOfBounds { index: i, len });
        }
        if i < self.pad {
            return Ok(true);
        }
        let j = i - self.pad;
        if j < self.base.len() {
            self.charged.set(self.charged.get() + 1);
            Ok(self.base.bit(j))
        } else {
            Ok(false)
        }
    }

    pub fn charged(&self) -> u64 {
        self.charged.get()
    }

    /// Returns the queries charged since the last reset and zeroes the
    /// counter.
    pub fn snapshot_and_reset(&self) -> u64 {
        self.charged.replace(0)
    }

    /// The padded word itself, built without charging anything. Used to
    /// derive exact reference answers, never by the search routines.
    pub fn materialize(&self) -> Word {
        self.base.padded(self.pad)
    }
}
