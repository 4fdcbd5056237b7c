use std::fmt;

use crate::superalgebra::{Gen, NUM_GENS};

/// PBW monomial: exponent of each generator in the fixed order
/// `Z < H < Xp < Xm < vp < vm < vbp < vbm`. Odd exponents are 0 or 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub [u8; NUM_GENS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NUM_GENS]);

    pub fn gen(g: Gen) -> Mono {
        Mono::ONE.times(g)
    }

    pub fn pow(g: Gen, k: u8) -> Mono {
        let mut m = Mono::ONE;
        m.0[g.index()] = k;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, g: Gen) -> u8 {
        self.0[g.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Number of odd generator factors.
    pub fn odd_count(&self) -> u32 {
        self.0[4..].iter().map(|&e| e as u32).sum()
    }

    pub fn parity(&self) -> u8 {
        (self.odd_count() % 2) as u8
    }

    /// Highest generator present.
    pub fn last(&self) -> Option<Gen> {
        (0..NUM_GENS)
            .rev()
            .find(|&i| self.0[i] > 0)
            .map(Gen::from_index)
    }

    pub fn first(&self) -> Option<Gen> {
        (0..NUM_GENS).find(|&i| self.0[i] > 0).map(Gen::from_index)
    }

    /// Append one factor without reordering; caller guarantees order.
    pub(crate) fn times(mut self, g: Gen) -> Mono {
        self.0[g.index()] += 1;
        self
    }

    pub(crate) fn without(mut self, g: Gen) -> Mono {
        self.0[g.index()] -= 1;
        self
    }

    /// Concatenation when every factor of `self` precedes every factor of `o`.
    pub(crate) fn concat(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..NUM_GENS {
            m.0[i] += o.0[i];
        }
        m
    }

    /// Generators of the monomial as an ordered word.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                w.push(Gen::from_index(i));
            }
        }
        w
    }

    /// Only generators from the listed set appear.
    pub fn supported_on(&self, gens: &[Gen]) -> bool {
        Gen::ALL
            .iter()
            .all(|g| self.exp(*g) == 0 || gens.contains(g))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for g in Gen::ALL {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", g)?;
            } else {
                write!(f, "{}^{}", g, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
