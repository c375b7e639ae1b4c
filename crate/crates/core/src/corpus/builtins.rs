//! The built-in algebras: group algebras and their duals for seven small groups, and `H8`.

use crate::corpus::{dual_group_algebra, group_algebra, kac_paljutkin, GroupTable};
use crate::error::Result;
use crate::hopf::HopfAlgebraData;

#[derive(Debug, Clone, Copy)]
enum Source {
    Group(fn() -> GroupTable),
    DualGroup(fn() -> GroupTable),
    KacPaljutkin,
}

/// A named built-in algebra with its expected irreducible degrees.
#[derive(Debug, Clone, Copy)]
pub struct Builtin {
    pub name: &'static str,
    pub cyclotomic_order: u32,
    pub expected_degrees: &'static [u32],
    source: Source,
}

impl Builtin {
    pub fn build(&self) -> Result<HopfAlgebraData> {
        match self.source {
            Source::Group(g) => group_algebra(&g(), self.cyclotomic_order),
            Source::DualGroup(g) => dual_group_algebra(&g(), self.cyclotomic_order),
            Source::KacPaljutkin => Ok(kac_paljutkin()),
        }
    }
}

fn c2() -> GroupTable {
    GroupTable::cyclic(2)
}

fn c4() -> GroupTable {
    GroupTable::cyclic(4)
}

const ONES_2: &[u32] = &[1, 1];
const ONES_4: &[u32] = &[1, 1, 1, 1];
const ONES_6: &[u32] = &[1; 6];
const ONES_8: &[u32] = &[1; 8];
const ONES_12: &[u32] = &[1; 12];
const S3_DEGREES: &[u32] = &[1, 1, 2];
const ORDER_8_DEGREES: &[u32] = &[1, 1, 1, 1, 2];
const A4_DEGREES: &[u32] = &[1, 1, 1, 3];

macro_rules! group_pair {
    ($g:literal, $dual:literal, $table:expr, $n:expr, $deg:expr, $ones:expr) => {
        [
            Builtin {
                name: $g,
                cyclotomic_order: $n,
                expected_degrees: $deg,
                source: Source::Group($table),
            },
            Builtin {
                name: $dual,
                cyclotomic_order: $n,
                expected_degrees: $ones,
                source: Source::DualGroup($table),
            },
        ]
    };
}

/// All built-ins in a fixed order. The cyclotomic order is the smallest `N` with
/// `Q(zeta_N) = Q(zeta_exponent)`.
pub fn builtins() -> Vec<Builtin> {
    let mut out = Vec::new();
    out.extend(group_pair!("C2", "Fun(C2)", c2, 1, ONES_2, ONES_2));
    out.extend(group_pair!("C4", "Fun(C4)", c4, 4, ONES_4, ONES_4));
    out.extend(group_pair!("C2xC2", "Fun(C2xC2)", GroupTable::klein_four, 1, ONES_4, ONES_4));
    out.extend(group_pair!("S3", "Fun(S3)", GroupTable::symmetric3, 3, S3_DEGREES, ONES_6));
    out.extend(group_pair!("D4", "Fun(D4)", GroupTable::dihedral4, 4, ORDER_8_DEGREES, ONES_8));
    out.extend(group_pair!("Q8", "Fun(Q8)", GroupTable::quaternion, 4, ORDER_8_DEGREES, ONES_8));
    out.extend(group_pair!("A4", "Fun(A4)", GroupTable::alternating4, 3, A4_DEGREES, ONES_12));
    out.push(Builtin {
        name: "H8",
        cyclotomic_order: 8,
        expected_degrees: ORDER_8_DEGREES,
        source: Source::KacPaljutkin,
    });
    out
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(char::is_ascii_alphanumeric)
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

/// Looks a built-in up by name, ignoring case and punctuation (`Fun(S3)`, `fun-s3`).
pub fn builtin(name: &str) -> Option<Builtin> {
    let key = normalize(name);
    builtins().into_iter().find(|b| normalize(b.name) == key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf;

    #[test]
    fn lookup_ignores_case_and_punctuation() {
        assert_eq!(builtin("fun-s3").unwrap().name, "Fun(S3)");
        assert_eq!(builtin("h8").unwrap().name, "H8");
        assert_eq!(builtin("c2xc2").unwrap().name, "C2xC2");
        assert!(builtin("S4").is_none());
        assert_eq!(builtins().len(), 15);
    }

    #[test]
    fn every_builtin_builds_and_verifies() {
        for b in builtins() {
            let h = b.build().unwrap();
            let dim: u32 = b.expected_degrees.iter().map(|d| d * d).sum();
            assert_eq!(h.dim() as u32, dim, "{}", b.name);
            assert!(verify_hopf(&h).is_hopf(), "{}", b.name);
        }
    }
}
