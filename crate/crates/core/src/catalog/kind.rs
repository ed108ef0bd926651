use std::fmt;
use std::str::FromStr;

use crate::error::SpecError;

/// Parameters a family may take besides its order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    X,
    Y,
    Alpha,
    M,
    K,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::X => "x",
            Param::Y => "y",
            Param::Alpha => "alpha",
            Param::M => "m",
            Param::K => "k",
        }
    }
}

macro_rules! kinds {
    ($($variant:ident => $name:literal, [$($param:ident),*];)*) => {
        /// Every matrix family the catalog can build.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum MatrixKind {
            $($variant,)*
        }

        impl MatrixKind {
            pub const ALL: &'static [MatrixKind] = &[$(MatrixKind::$variant,)*];

            /// Kebab-case name used on the command line.
            pub fn name(self) -> &'static str {
                match self {
                    $(MatrixKind::$variant => $name,)*
                }
            }

            /// Parameters required by this family, besides `n`.
            pub fn params(self) -> &'static [Param] {
                match self {
                    $(MatrixKind::$variant => &[$(Param::$param),*],)*
                }
            }
        }
    };
}

kinds! {
    Identity => "identity", [];
    Pascal => "pascal", [X];
    SummationS => "summation-s", [K, X];
    SummationG => "summation-g", [K, X];
    PascalDerivation => "pascal-derivation", [];
    GenEuler => "gen-euler", [Alpha, X];
    EulerPoly => "euler-poly", [X];
    Euler => "euler", [];
    SpecializedEuler => "specialized-euler", [];
    DMatrix => "d-matrix", [];
    Fibonacci => "fibonacci", [];
    FibonacciInverseClosed => "fibonacci-inverse-closed", [];
    Lucas => "lucas", [];
    LucasInverseClosed => "lucas-inverse-closed", [];
    GMat => "g-mat", [X];
    HMat => "h-mat", [X];
    MMat => "m-mat", [Alpha, X];
    NMat => "n-mat", [Alpha, X];
    L1Mat => "l1-mat", [Alpha, X];
    L2Mat => "l2-mat", [Alpha, X];
    StirlingFirst => "stirling-first", [];
    StirlingSecond => "stirling-second", [];
    FactorialStirling => "factorial-stirling", [];
    StM => "st-m", [M];
    CTilde => "c-tilde", [];
    DTilde => "d-tilde", [];
    ShiftedEuler => "shifted-euler", [X];
    Vandermonde => "vandermonde", [X];
    DeltaBinom => "delta-binom", [X];
}

impl MatrixKind {
    pub fn requires(self, p: Param) -> bool {
        self.params().contains(&p)
    }

    /// Families with two readings of their defining display.
    pub fn has_printed_variant(self) -> bool {
        matches!(
            self,
            MatrixKind::GMat | MatrixKind::HMat | MatrixKind::L1Mat | MatrixKind::L2Mat | MatrixKind::CTilde | MatrixKind::DTilde
        )
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MatrixKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| SpecError::UnknownKind(s.to_string()))
    }
}
