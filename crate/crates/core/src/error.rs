use std::fmt;

use thiserror::Error;

use crate::switching::TwoSwitch;

/// First condition of the realizability test that a candidate matrix fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The color identifier of `row` is outside `1..=k`.
    ColorOutOfRange { row: usize, color: usize },
    /// The within-class block of `color` is not a graphic sequence.
    NotGraphic { color: usize },
    /// The cross block between two color classes is not bigraphic.
    NotBigraphic { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColorOutOfRange { row, color } => {
                write!(f, "row {} has color identifier {color} outside the palette", row + 1)
            }
            Violation::NotGraphic { color } => {
                write!(f, "color {color} block is not a graphic sequence")
            }
            Violation::NotBigraphic { first, second } => {
                write!(f, "colors {first} and {second} cross block is not bigraphic")
            }
        }
    }
}

/// Why a color 2-switch cannot be applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchViolation {
    VertexOutOfRange,
    NotDistinct,
    /// `c(u) != c(w)`
    ColorMismatchUw,
    /// `c(x) != c(y)`
    ColorMismatchXy,
    MissingEdgeUx,
    MissingEdgeWy,
    PresentEdgeUy,
    PresentEdgeWx,
}

impl fmt::Display for SwitchViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SwitchViolation::VertexOutOfRange => "vertex out of range",
            SwitchViolation::NotDistinct => "the four vertices are not distinct",
            SwitchViolation::ColorMismatchUw => "color mismatch: u and w differ",
            SwitchViolation::ColorMismatchXy => "color mismatch: x and y differ",
            SwitchViolation::MissingEdgeUx => "edge ux is absent",
            SwitchViolation::MissingEdgeWy => "edge wy is absent",
            SwitchViolation::PresentEdgeUy => "edge uy is already present",
            SwitchViolation::PresentEdgeWx => "edge wx is already present",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("not realizable: {0}")]
    NotRealizable(Violation),
    #[error("switch {switch} is not applicable: {reason}")]
    InapplicableSwitch {
        switch: TwoSwitch,
        reason: SwitchViolation,
    },
    #[error("not co-realizable: the color degree matrices differ")]
    NotCoRealizable,
    #[error("not a tree")]
    NotATree,
    #[error("instance too large: {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("closed form for n = {n} is not within rounding distance of an integer ({value})")]
    Precision { n: usize, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
