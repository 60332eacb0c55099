use num_integer::Integer;
use serde::Serialize;

use super::{CensusError, ClassSetId};
use crate::classes::{ClassKind, HeightConvention, TauQuadruple, WrPair};

/// One enumerated class: a quadruple for `All`/`SemiStable`, a pair for
/// `WellRounded`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassMember {
    Quadruple(TauQuadruple),
    Pair(WrPair),
}

/// Line format for JSONL output.
#[derive(Debug, Clone, Serialize)]
struct MemberRecord {
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    kind: ClassKind,
    height: u64,
}

impl ClassMember {
    pub fn quadruple(&self) -> TauQuadruple {
        match self {
            ClassMember::Quadruple(q) => *q,
            ClassMember::Pair(p) => p.to_quadruple(),
        }
    }

    /// Height under the convention of the set the member came from: pair
    /// height for pairs, maximum height for quadruples.
    pub fn height(&self) -> u64 {
        match self {
            ClassMember::Quadruple(q) => q.height(HeightConvention::Quadruple),
            ClassMember::Pair(p) => p.height(),
        }
    }

    /// `{"a":..,"b":..,"c":..,"d":..,"kind":..,"height":..}`.
    pub fn to_json(&self) -> String {
        let q = self.quadruple();
        let rec = MemberRecord {
            a: q.a(),
            b: q.b(),
            c: q.c(),
            d: q.d(),
            kind: q.classify(),
            height: self.height(),
        };
        serde_json::to_string(&rec).expect("plain record serializes")
    }
}

fn coprime_halves(b: u64) -> impl Iterator<Item = u64> {
    (0..=b / 2).filter(move |a| a.gcd(&b) == 1)
}

/// Streams the members of a set with height at most `T`, each exactly once.
///
/// Quadruples come in lexicographic order of `(b, a, d, c)`; pairs in order
/// of `(b, a)`, starting with `(0, 1)`.
pub fn enumerate(
    set: ClassSetId,
    t: u64,
) -> Result<Box<dyn Iterator<Item = ClassMember> + Send>, CensusError> {
    if t == 0 {
        return Err(CensusError::ZeroHeight);
    }
    if set == ClassSetId::WellRounded {
        let pairs = (1..=t).flat_map(|b| {
            coprime_halves(b)
                .filter(move |&a| a > 0 || b == 1)
                .map(move |a| ClassMember::Pair(WrPair::new_unchecked(a, b)))
        });
        return Ok(Box::new(pairs));
    }
    let semistable = set == ClassSetId::SemiStable;
    let quads = (1..=t).flat_map(move |b| {
        let b2 = b * b;
        coprime_halves(b).flat_map(move |a| {
            let num = b2 - a * a;
            (1..=t).flat_map(move |d| {
                let lo = (d * num).div_ceil(b2);
                let hi = if semistable { d } else { t };
                (lo..=hi)
                    .filter(move |c| c.gcd(&d) == 1)
                    .map(move |c| ClassMember::Quadruple(TauQuadruple::new_unchecked(a, b, c, d)))
            })
        })
    });
    Ok(Box::new(quads))
}
