use std::fmt;
use std::str::FromStr;

use peaklab_perm::GroupKind;
use peaklab_poset::ImageSetSpec;

use crate::OrderError;

/// Which order polynomial of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderPolyKind {
    AOrdinary,
    ACyclic,
    BOrdinary,
    BCyclic,
    EnrichedInterior,
    EnrichedLeft,
    EnrichedRight,
    EnrichedExterior,
    EnrichedB,
}

impl OrderPolyKind {
    pub const ALL: [OrderPolyKind; 9] = [
        OrderPolyKind::AOrdinary,
        OrderPolyKind::ACyclic,
        OrderPolyKind::BOrdinary,
        OrderPolyKind::BCyclic,
        OrderPolyKind::EnrichedInterior,
        OrderPolyKind::EnrichedLeft,
        OrderPolyKind::EnrichedRight,
        OrderPolyKind::EnrichedExterior,
        OrderPolyKind::EnrichedB,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            OrderPolyKind::AOrdinary => "A_ordinary",
            OrderPolyKind::ACyclic => "A_cyclic",
            OrderPolyKind::BOrdinary => "B_ordinary",
            OrderPolyKind::BCyclic => "B_cyclic",
            OrderPolyKind::EnrichedInterior => "enriched_interior",
            OrderPolyKind::EnrichedLeft => "enriched_left",
            OrderPolyKind::EnrichedRight => "enriched_right",
            OrderPolyKind::EnrichedExterior => "enriched_exterior",
            OrderPolyKind::EnrichedB => "enriched_B",
        }
    }

    pub fn group(self) -> GroupKind {
        match self {
            OrderPolyKind::BOrdinary | OrderPolyKind::BCyclic | OrderPolyKind::EnrichedB => GroupKind::Hyperoctahedral,
            _ => GroupKind::Symmetric,
        }
    }

    /// The image set whose chain counts this polynomial interpolates;
    /// `None` for the cyclic kinds, which have no chain oracle.
    pub fn image_spec(self, k: usize) -> Option<ImageSetSpec> {
        Some(match self {
            OrderPolyKind::AOrdinary => ImageSetSpec::Ordinary(k),
            OrderPolyKind::BOrdinary => ImageSetSpec::OrdinaryB(k),
            OrderPolyKind::EnrichedInterior => ImageSetSpec::Enriched(k),
            OrderPolyKind::EnrichedLeft => ImageSetSpec::LeftEnriched(k),
            OrderPolyKind::EnrichedRight => ImageSetSpec::RightEnriched(k),
            OrderPolyKind::EnrichedExterior => ImageSetSpec::ExteriorEnriched(k),
            OrderPolyKind::EnrichedB => ImageSetSpec::BEnriched(k),
            OrderPolyKind::ACyclic | OrderPolyKind::BCyclic => return None,
        })
    }

    pub fn is_enriched(self) -> bool {
        matches!(
            self,
            OrderPolyKind::EnrichedInterior
                | OrderPolyKind::EnrichedLeft
                | OrderPolyKind::EnrichedRight
                | OrderPolyKind::EnrichedExterior
                | OrderPolyKind::EnrichedB
        )
    }
}

impl fmt::Display for OrderPolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for OrderPolyKind {
    type Err = OrderError;
    fn from_str(s: &str) -> Result<Self, OrderError> {
        Self::ALL.into_iter().find(|k| k.tag() == s).ok_or_else(|| OrderError::UnknownKind(s.to_string()))
    }
}

/// Which peak or Eulerian polynomial of a whole group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeakPolyKind {
    /// `A_n(t) = Σ t^(des+1)` over `S_n`
    AEulerian,
    /// `B_n(t) = Σ t^des_B` over `B_n`
    BEulerian,
    /// `B^(c)_n(t) = Σ t^cdes_B` over `B_n`
    BCyclicEulerian,
    /// `W_n(t) = Σ t^(pe+1)` over `S_n`
    WInterior,
    /// `W^(l)_n(t) = Σ t^lpe` over `S_n`
    WLeft,
    /// `Σ t^pe_B` over `π(1) > 0`
    WPlus,
    /// `Σ t^(pe_B+1)` over `π(1) < 0`
    WMinus,
    /// `W_{n,i}(t) = Σ t^des_B` over signed permutations with `i` minus signs
    WWeighted(usize),
}

impl PeakPolyKind {
    pub fn tag(self) -> String {
        match self {
            PeakPolyKind::AEulerian => "A_eulerian".into(),
            PeakPolyKind::BEulerian => "B_eulerian".into(),
            PeakPolyKind::BCyclicEulerian => "B_cyclic_eulerian".into(),
            PeakPolyKind::WInterior => "W_interior".into(),
            PeakPolyKind::WLeft => "W_left".into(),
            PeakPolyKind::WPlus => "W_plus".into(),
            PeakPolyKind::WMinus => "W_minus".into(),
            PeakPolyKind::WWeighted(i) => format!("W_weighted({i})"),
        }
    }
}

impl FromStr for PeakPolyKind {
    type Err = OrderError;
    fn from_str(s: &str) -> Result<Self, OrderError> {
        Ok(match s {
            "A_eulerian" => PeakPolyKind::AEulerian,
            "B_eulerian" => PeakPolyKind::BEulerian,
            "B_cyclic_eulerian" => PeakPolyKind::BCyclicEulerian,
            "W_interior" => PeakPolyKind::WInterior,
            "W_left" => PeakPolyKind::WLeft,
            "W_plus" => PeakPolyKind::WPlus,
            "W_minus" => PeakPolyKind::WMinus,
            _ => {
                let i = s
                    .strip_prefix("W_weighted(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|r| r.parse().ok())
                    .ok_or_else(|| OrderError::UnknownKind(s.to_string()))?;
                PeakPolyKind::WWeighted(i)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for k in OrderPolyKind::ALL {
            assert_eq!(k.tag().parse::<OrderPolyKind>().unwrap(), k);
        }
        assert!("nope".parse::<OrderPolyKind>().is_err());
        assert_eq!("W_weighted(2)".parse::<PeakPolyKind>().unwrap(), PeakPolyKind::WWeighted(2));
        assert_eq!(PeakPolyKind::WWeighted(3).tag().parse::<PeakPolyKind>().unwrap(), PeakPolyKind::WWeighted(3));
    }
}
