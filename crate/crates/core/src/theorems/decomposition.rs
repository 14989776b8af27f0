//! Splittings of `R` into an annihilator and a principal one-sided ideal
//! generated by a power of `aa*` or `a*a`, decided by set arithmetic.

use super::{annihilator, check_exponent, image, Side, Subset};
use crate::backends::{finite_size, Backend};
use crate::error::{Error, Result};

/// The eight splittings, numbered by their condition (2)..(9). Even
/// conditions ask for a direct sum, odd ones for a plain sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decomposition {
    /// `R = a° ⊕ (a*a)^n R`
    RightAnnDirect,
    /// `R = a° + (a*a)^n R`
    RightAnnSum,
    /// `R = (a*)° ⊕ (aa*)^n R`
    RightAnnStarDirect,
    /// `R = (a*)° + (aa*)^n R`
    RightAnnStarSum,
    /// `R = °a ⊕ R(aa*)^n`
    LeftAnnDirect,
    /// `R = °a + R(aa*)^n`
    LeftAnnSum,
    /// `R = °(a*) ⊕ R(a*a)^n`
    LeftAnnStarDirect,
    /// `R = °(a*) + R(a*a)^n`
    LeftAnnStarSum,
}

impl Decomposition {
    pub const ALL: [Decomposition; 8] = [
        Decomposition::RightAnnDirect,
        Decomposition::RightAnnSum,
        Decomposition::RightAnnStarDirect,
        Decomposition::RightAnnStarSum,
        Decomposition::LeftAnnDirect,
        Decomposition::LeftAnnSum,
        Decomposition::LeftAnnStarDirect,
        Decomposition::LeftAnnStarSum,
    ];

    pub fn condition(self) -> u8 {
        Decomposition::ALL.iter().position(|&d| d == self).unwrap() as u8 + 2
    }

    pub fn from_condition(k: u8) -> Result<Self> {
        (2..=9)
            .contains(&k)
            .then(|| Decomposition::ALL[usize::from(k - 2)])
            .ok_or_else(|| {
                Error::InvalidArgument(format!("decompositions are numbered 2..=9, got {k}"))
            })
    }

    pub fn is_direct(self) -> bool {
        self.condition().is_multiple_of(2)
    }

    pub fn label(self) -> &'static str {
        match self {
            Decomposition::RightAnnDirect => "R = a° ⊕ (a*a)^n R",
            Decomposition::RightAnnSum => "R = a° + (a*a)^n R",
            Decomposition::RightAnnStarDirect => "R = (a*)° ⊕ (aa*)^n R",
            Decomposition::RightAnnStarSum => "R = (a*)° + (aa*)^n R",
            Decomposition::LeftAnnDirect => "R = °a ⊕ R(aa*)^n",
            Decomposition::LeftAnnSum => "R = °a + R(aa*)^n",
            Decomposition::LeftAnnStarDirect => "R = °(a*) ⊕ R(a*a)^n",
            Decomposition::LeftAnnStarSum => "R = °(a*) + R(a*a)^n",
        }
    }
}

/// The computed subsets and which of the required checks passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCheck<E> {
    pub variant: Decomposition,
    pub n: u32,
    pub annihilator: Subset<E>,
    pub ideal: Subset<E>,
    pub sum_is_whole: bool,
    pub intersection_trivial: bool,
    pub holds: bool,
}

pub fn t39_decomposition<B: Backend>(
    r: &B,
    a: &B::Elem,
    n: u32,
    variant: Decomposition,
) -> Result<DecompositionCheck<B::Elem>> {
    check_exponent("n", n)?;
    let size = finite_size(r, "decomposition")?;
    let a_star = r.star(a);
    let ata = r.pow(&r.a_star_a(a), n);
    let aat = r.pow(&r.aa_star(a), n);
    use Decomposition::*;
    let (ann, ideal) = match variant {
        RightAnnDirect | RightAnnSum => (
            annihilator(r, a, Side::Right)?,
            image(r, &ata, Side::Right)?,
        ),
        RightAnnStarDirect | RightAnnStarSum => (
            annihilator(r, &a_star, Side::Right)?,
            image(r, &aat, Side::Right)?,
        ),
        LeftAnnDirect | LeftAnnSum => (annihilator(r, a, Side::Left)?, image(r, &aat, Side::Left)?),
        LeftAnnStarDirect | LeftAnnStarSum => (
            annihilator(r, &a_star, Side::Left)?,
            image(r, &ata, Side::Left)?,
        ),
    };
    let sum_is_whole = ann.sum_set(r, &ideal).len() == size;
    let meet = ann.intersection(&ideal);
    let intersection_trivial = meet.len() == 1 && r.is_zero(&meet.members()[0]);
    let holds = sum_is_whole && (!variant.is_direct() || intersection_trivial);
    Ok(DecompositionCheck {
        variant,
        n,
        annihilator: ann,
        ideal,
        sum_is_whole,
        intersection_trivial,
        holds,
    })
}
