use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use peaklab_perm::stats::{self, PeakKind};
use peaklab_perm::{GroupKind, PosSet};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::elem::GAElem;
use crate::group::{Elements, Group};
use crate::{AlgebraError, Result};

/// A statistic whose level sets are summed to form class sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassFamily {
    DescentSet,
    DescentNum,
    CyclicDescentNum,
    BDescentNum,
    BCyclicDescentNum,
    PeakInteriorSet,
    PeakLeftSet,
    PeakRightSet,
    PeakExteriorSet,
    PeakInteriorNum,
    PeakLeftNum,
    PeakRightNum,
    PeakExteriorNum,
    BPeakSignNum,
    BPeakSignSet,
}

impl ClassFamily {
    pub const ALL: [ClassFamily; 15] = [
        ClassFamily::DescentSet,
        ClassFamily::DescentNum,
        ClassFamily::CyclicDescentNum,
        ClassFamily::BDescentNum,
        ClassFamily::BCyclicDescentNum,
        ClassFamily::PeakInteriorSet,
        ClassFamily::PeakLeftSet,
        ClassFamily::PeakRightSet,
        ClassFamily::PeakExteriorSet,
        ClassFamily::PeakInteriorNum,
        ClassFamily::PeakLeftNum,
        ClassFamily::PeakRightNum,
        ClassFamily::PeakExteriorNum,
        ClassFamily::BPeakSignNum,
        ClassFamily::BPeakSignSet,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ClassFamily::DescentSet => "descent_set",
            ClassFamily::DescentNum => "descent_num",
            ClassFamily::CyclicDescentNum => "cyclic_descent_num",
            ClassFamily::BDescentNum => "B_descent_num",
            ClassFamily::BCyclicDescentNum => "B_cyclic_descent_num",
            ClassFamily::PeakInteriorSet => "peak_interior_set",
            ClassFamily::PeakLeftSet => "peak_left_set",
            ClassFamily::PeakRightSet => "peak_right_set",
            ClassFamily::PeakExteriorSet => "peak_exterior_set",
            ClassFamily::PeakInteriorNum => "peak_interior_num",
            ClassFamily::PeakLeftNum => "peak_left_num",
            ClassFamily::PeakRightNum => "peak_right_num",
            ClassFamily::PeakExteriorNum => "peak_exterior_num",
            ClassFamily::BPeakSignNum => "B_peak_sign_num",
            ClassFamily::BPeakSignSet => "B_peak_sign_set",
        }
    }

    pub fn group(self) -> GroupKind {
        match self {
            ClassFamily::BDescentNum
            | ClassFamily::BCyclicDescentNum
            | ClassFamily::BPeakSignNum
            | ClassFamily::BPeakSignSet => GroupKind::Hyperoctahedral,
            _ => GroupKind::Symmetric,
        }
    }

    /// The label of the element of rank `i`.
    pub fn classify(self, group: &Group, i: usize) -> Result<ClassLabel> {
        if group.kind() != self.group() {
            return Err(AlgebraError::WrongGroup { family: self.tag(), group: group.kind() });
        }
        Ok(match &group.elems {
            Elements::Symmetric(e) => {
                let p = &e[i];
                match self {
                    ClassFamily::DescentSet => ClassLabel::Set(stats::descent_set(p)),
                    ClassFamily::DescentNum => ClassLabel::Num(stats::des(p)),
                    ClassFamily::CyclicDescentNum => ClassLabel::Num(stats::cdes(p)),
                    ClassFamily::PeakInteriorSet => ClassLabel::Set(stats::peak_set(p, PeakKind::Interior)),
                    ClassFamily::PeakLeftSet => ClassLabel::Set(stats::peak_set(p, PeakKind::Left)),
                    ClassFamily::PeakRightSet => ClassLabel::Set(stats::peak_set(p, PeakKind::Right)),
                    ClassFamily::PeakExteriorSet => ClassLabel::Set(stats::peak_set(p, PeakKind::Exterior)),
                    ClassFamily::PeakInteriorNum => ClassLabel::Num(stats::pe(p)),
                    ClassFamily::PeakLeftNum => ClassLabel::Num(stats::lpe(p)),
                    ClassFamily::PeakRightNum => ClassLabel::Num(stats::rpe(p)),
                    ClassFamily::PeakExteriorNum => ClassLabel::Num(stats::epe(p)),
                    _ => unreachable!("checked group"),
                }
            }
            Elements::Hyperoctahedral(e) => {
                let p = &e[i];
                match self {
                    ClassFamily::BDescentNum => ClassLabel::Num(stats::des_b(p)),
                    ClassFamily::BCyclicDescentNum => ClassLabel::Num(stats::cdes_b(p)),
                    ClassFamily::BPeakSignNum => {
                        ClassLabel::SignNum { sign: stats::sign_stat(p), peaks: stats::pe_b(p) }
                    }
                    ClassFamily::BPeakSignSet => {
                        ClassLabel::SignSet { sign: stats::sign_stat(p), peaks: stats::signed_peak_set(p) }
                    }
                    _ => unreachable!("checked group"),
                }
            }
        })
    }
}

impl fmt::Display for ClassFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ClassFamily {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        // `right_peak_num` is accepted as a synonym
        if s == "right_peak_num" {
            return Ok(ClassFamily::PeakRightNum);
        }
        Self::ALL.into_iter().find(|f| f.tag() == s).ok_or_else(|| AlgebraError::UnknownFamily(s.to_string()))
    }
}

/// Value of a class statistic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Num(usize),
    Set(PosSet),
    /// `sign` is 1 when `π(1) < 0`.
    SignNum {
        sign: usize,
        peaks: usize,
    },
    SignSet {
        sign: usize,
        peaks: PosSet,
    },
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Num(k) => write!(f, "{k}"),
            ClassLabel::Set(s) => write!(f, "{s}"),
            ClassLabel::SignNum { sign, peaks } => write!(f, "({peaks}, {})", if *sign == 1 { '-' } else { '+' }),
            ClassLabel::SignSet { sign, peaks } => write!(f, "({sign}, {peaks})"),
        }
    }
}

/// Numbers as JSON numbers, sets as sorted lists, signed labels as
/// `{"sign":1,"peaks":...}`.
impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClassLabel::Num(k) => s.serialize_u64(*k as u64),
            ClassLabel::Set(p) => p.serialize(s),
            ClassLabel::SignNum { sign, peaks } => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("sign", sign)?;
                m.serialize_entry("peaks", peaks)?;
                m.end()
            }
            ClassLabel::SignSet { sign, peaks } => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("sign", sign)?;
                m.serialize_entry("peaks", peaks)?;
                m.end()
            }
        }
    }
}

/// One level set of a family: its label and member ranks in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub label: ClassLabel,
    pub members: Vec<usize>,
}

impl Class {
    /// Lexicographically least member.
    pub fn representative(&self) -> usize {
        self.members[0]
    }

    pub fn sum(&self, group: &Arc<Group>) -> GAElem {
        GAElem::sum_of(group, self.members.iter().copied())
    }
}

/// Nonempty classes of `family` sorted by label.
pub fn classes(group: &Group, family: ClassFamily) -> Result<Vec<Class>> {
    let mut map: BTreeMap<ClassLabel, Vec<usize>> = BTreeMap::new();
    for i in 0..group.order() {
        map.entry(family.classify(group, i)?).or_default().push(i);
    }
    Ok(map.into_iter().map(|(label, members)| Class { label, members }).collect())
}

/// Class sum for one label. The flag is set when no element carries the
/// label, in which case the sum is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSum {
    pub elem: GAElem,
    pub empty: bool,
}

pub fn class_sum(n: usize, family: ClassFamily, label: ClassLabel) -> Result<ClassSum> {
    let g = Group::get(family.group(), n)?;
    let mut members = Vec::new();
    for i in 0..g.order() {
        if family.classify(&g, i)? == label {
            members.push(i);
        }
    }
    Ok(ClassSum { empty: members.is_empty(), elem: GAElem::sum_of(&g, members) })
}
