use std::fmt;

/// Family a variable belongs to.
///
/// The resolution side works with the generic entries `t_i_j`; the equivariant
/// side works with the entries `c_i_j` of the skew block and `u_k_i` of the
/// 3-row block, which are renamed into `t` variables by substitution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    Tau = 0,
    C = 1,
    U = 2,
}

impl VarKind {
    pub fn prefix(self) -> char {
        match self {
            VarKind::Tau => 't',
            VarKind::C => 'c',
            VarKind::U => 'u',
        }
    }
}

/// A variable indexed by an ordered pair of 1-based indices.
///
/// Packed into 16 bits as `kind | i | j`, so the derived order is
/// `(kind, i, j)` lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableId(u16);

pub const MAX_INDEX: usize = 127;

impl VariableId {
    fn pack(kind: VarKind, i: usize, j: usize) -> Self {
        assert!(
            (1..=MAX_INDEX).contains(&i) && (1..=MAX_INDEX).contains(&j),
            "variable index out of range: ({i}, {j})"
        );
        VariableId(((kind as u16) << 14) | ((i as u16) << 7) | j as u16)
    }

    /// `t_i_j` with `i < j`.
    pub fn tau(i: usize, j: usize) -> Self {
        assert!(i < j, "t_{i}_{j} requires i < j");
        Self::pack(VarKind::Tau, i, j)
    }

    /// `c_i_j` with `i < j`.
    pub fn c(i: usize, j: usize) -> Self {
        assert!(i < j, "c_{i}_{j} requires i < j");
        Self::pack(VarKind::C, i, j)
    }

    /// `u_k_i`: row `k` of the 3-row block, column `i`.
    pub fn u(k: usize, i: usize) -> Self {
        Self::pack(VarKind::U, k, i)
    }

    pub fn new(kind: VarKind, i: usize, j: usize) -> Self {
        match kind {
            VarKind::Tau => Self::tau(i, j),
            VarKind::C => Self::c(i, j),
            VarKind::U => Self::u(i, j),
        }
    }

    pub fn kind(self) -> VarKind {
        match self.0 >> 14 {
            0 => VarKind::Tau,
            1 => VarKind::C,
            _ => VarKind::U,
        }
    }

    pub fn i(self) -> usize {
        ((self.0 >> 7) & 0x7f) as usize
    }

    pub fn j(self) -> usize {
        (self.0 & 0x7f) as usize
    }

    pub(crate) fn raw(self) -> u16 {
        self.0
    }

    pub(crate) fn from_raw(raw: u16) -> Self {
        VariableId(raw)
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}_{}", self.kind().prefix(), self.i(), self.j())
    }
}

impl fmt::Debug for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_roundtrip() {
        let v = VariableId::u(3, 11);
        assert_eq!((v.kind(), v.i(), v.j()), (VarKind::U, 3, 11));
        assert_eq!(v.to_string(), "u_3_11");
        assert_eq!(VariableId::tau(1, 2).to_string(), "t_1_2");
    }

    #[test]
    fn order_is_lexicographic_in_pair() {
        let mut vs = vec![
            VariableId::tau(2, 3),
            VariableId::tau(1, 10),
            VariableId::tau(1, 2),
            VariableId::c(1, 2),
        ];
        vs.sort();
        assert_eq!(
            vs,
            vec![
                VariableId::tau(1, 2),
                VariableId::tau(1, 10),
                VariableId::tau(2, 3),
                VariableId::c(1, 2)
            ]
        );
    }

    #[test]
    #[should_panic]
    fn tau_requires_increasing_pair() {
        VariableId::tau(3, 3);
    }
}
