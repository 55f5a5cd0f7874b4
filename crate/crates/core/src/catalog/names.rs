use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

macro_rules! named_enum {
    ($(#[$m:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$m])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                $name::ALL
                    .iter()
                    .copied()
                    .find(|v| v.as_str().eq_ignore_ascii_case(s))
                    .ok_or_else(|| {
                        let names: Vec<_> = $name::ALL.iter().map(|v| v.as_str()).collect();
                        format!("unknown {} '{}', expected one of: {}", stringify!($name), s, names.join(", "))
                    })
            }
        }
    };
}

named_enum!(
    /// Named q-series from which every generating function is assembled.
    /// `JI`, `KI`, ... are the involution ("calligraphic") counterparts.
    SpecialName {
        J => "J",
        H => "H",
        K => "K",
        JI => "JI",
        KI => "KI",
        JIe => "JIe",
        KIe => "KIe",
        N => "N",
        S => "S",
        Ntilde => "Ntilde",
        NI => "NI",
        SI => "SI",
    }
);

named_enum!(
    /// Coxeter type of a family of groups.
    FamilyType {
        A => "A",
        B => "B",
        D => "D",
        Atilde => "Atilde",
        Btilde => "Btilde",
        Ctilde => "Ctilde",
        Dtilde => "Dtilde",
    }
);

named_enum!(
    /// Auxiliary series: path and heap generating functions, and the
    /// alternative (Laurent-form or defining-equation) expressions.
    AuxName {
        Ba => "Ba",
        Bna => "Bna",
        BnaA => "BnaA",
        CBa => "cBa",
        CBna => "cBna",
        CBaOdd => "cBaOdd",
        L => "L",
        LI => "LI",
        LIodd => "LIodd",
        LIoddOdd => "LIoddOdd",
        M => "M",
        Mstar => "Mstar",
        MI => "MI",
        Ocheck => "Ocheck",
        OcheckDef => "OcheckDef",
        OcheckStar => "OcheckStar",
        OIcheck => "OIcheck",
        OIcheckDef => "OIcheckDef",
        OIcheckStar => "OIcheckStar",
        OIcheckStarDef => "OIcheckStarDef",
        Ppoly => "Ppoly",
        PIpoly => "PIpoly",
        AtildeFull => "AtildeFull",
        ANeg => "ANeg",
        AInvNeg => "AInvNeg",
        BaNeg => "BaNeg",
        CBaNeg => "cBaNeg",
        CBaOddNeg => "cBaOddNeg",
    }
);

named_enum!(
    Variant {
        All => "all",
        Involutions => "inv",
    }
);

/// A family of generating functions: one Coxeter type, counting either all
/// fully commutative elements or only the involutions among them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family {
    pub ty: FamilyType,
    pub variant: Variant,
}

impl Family {
    pub const fn new(ty: FamilyType, variant: Variant) -> Self {
        Self { ty, variant }
    }

    pub const fn all(ty: FamilyType) -> Self {
        Self::new(ty, Variant::All)
    }

    pub const fn inv(ty: FamilyType) -> Self {
        Self::new(ty, Variant::Involutions)
    }

    pub fn every() -> Vec<Family> {
        let mut out = Vec::new();
        for &v in Variant::ALL {
            for &t in FamilyType::ALL {
                out.push(Family::new(t, v));
            }
        }
        out
    }

    /// First x-degree whose coefficient counts an actual group.
    pub fn first_degree(self) -> usize {
        match self.ty {
            FamilyType::A | FamilyType::B => 0,
            FamilyType::D | FamilyType::Atilde => 2,
            FamilyType::Btilde | FamilyType::Ctilde | FamilyType::Dtilde => 3,
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(self.ty, FamilyType::Atilde | FamilyType::Btilde | FamilyType::Ctilde | FamilyType::Dtilde)
    }

    /// Rank parameter of the group counted by the coefficient of `x^n`.
    pub fn group_index(self, n: usize) -> Option<usize> {
        let n = n as i64;
        let k = match self.ty {
            FamilyType::A | FamilyType::B | FamilyType::Btilde => n,
            FamilyType::D | FamilyType::Dtilde => n + 1,
            FamilyType::Atilde | FamilyType::Ctilde => n - 1,
        };
        (k >= 0).then_some(k as usize)
    }

    /// Number of generators of the group counted by the coefficient of `x^n`.
    pub fn generators(self, n: usize) -> usize {
        match self.ty {
            FamilyType::A | FamilyType::B | FamilyType::Atilde | FamilyType::Ctilde => n,
            FamilyType::D | FamilyType::Btilde => n + 1,
            FamilyType::Dtilde => n + 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::All => write!(f, "{}", self.ty),
            Variant::Involutions => write!(f, "{}-inv", self.ty),
        }
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.strip_suffix("-inv") {
            Some(t) => Ok(Family::inv(t.parse()?)),
            None => Ok(Family::all(s.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip_through_text() {
        for &a in AuxName::ALL {
            assert_eq!(a.as_str().parse::<AuxName>().unwrap(), a);
        }
        assert_eq!("Dtilde-inv".parse::<Family>().unwrap(), Family::inv(FamilyType::Dtilde));
        assert!("Z".parse::<SpecialName>().is_err());
    }

    #[test]
    fn generator_counts() {
        assert_eq!(Family::all(FamilyType::D).generators(3), 4);
        assert_eq!(Family::all(FamilyType::Atilde).generators(3), 3);
        assert_eq!(Family::all(FamilyType::Btilde).generators(3), 4);
        assert_eq!(Family::all(FamilyType::Ctilde).generators(4), 4);
        assert_eq!(Family::all(FamilyType::Dtilde).generators(3), 5);
    }
}
