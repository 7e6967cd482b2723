//! The two-element semifield B1 = {0, 1} with 1 + 1 = 1.

use std::fmt;
use std::ops::{Add, Mul};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum B1 {
    #[default]
    Zero,
    One,
}

impl B1 {
    pub const ALL: [B1; 2] = [B1::Zero, B1::One];

    pub fn is_zero(self) -> bool {
        self == B1::Zero
    }
}

impl From<bool> for B1 {
    fn from(b: bool) -> Self {
        if b {
            B1::One
        } else {
            B1::Zero
        }
    }
}

impl From<B1> for bool {
    fn from(b: B1) -> Self {
        b == B1::One
    }
}

impl Add for B1 {
    type Output = B1;

    fn add(self, rhs: B1) -> B1 {
        (bool::from(self) || bool::from(rhs)).into()
    }
}

impl Mul for B1 {
    type Output = B1;

    fn mul(self, rhs: B1) -> B1 {
        (bool::from(self) && bool::from(rhs)).into()
    }
}

impl fmt::Display for B1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            B1::Zero => f.write_str("0"),
            B1::One => f.write_str("1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::B1::{self, One, Zero};

    #[test]
    fn tables() {
        assert_eq!(Zero + Zero, Zero);
        assert_eq!(Zero + One, One);
        assert_eq!(One + Zero, One);
        assert_eq!(One + One, One);
        assert_eq!(One * One, One);
        assert_eq!(One * Zero, Zero);
        assert_eq!(Zero * One, Zero);
        assert_eq!(Zero * Zero, Zero);
    }

    #[test]
    fn semifield_laws() {
        for x in B1::ALL {
            assert_eq!(x + x, x);
            assert_eq!(x + Zero, x);
            assert_eq!(x * One, x);
            assert_eq!(x * Zero, Zero);
            for y in B1::ALL {
                assert_eq!(x + y, y + x);
                assert_eq!(x * y, y * x);
                for z in B1::ALL {
                    assert_eq!((x + y) + z, x + (y + z));
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }
}
