// Derives the by-value and assigning operator impls from a `&T op &T` impl.
macro_rules! forward_binops {
    ([$($gen:tt)*] $ty:ty, $Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl<$($gen)*> std::ops::$Op<$ty> for $ty {
            type Output = $ty;
            fn $op(self, rhs: $ty) -> $ty {
                std::ops::$Op::$op(&self, &rhs)
            }
        }
        impl<'b, $($gen)*> std::ops::$Op<&'b $ty> for $ty {
            type Output = $ty;
            fn $op(self, rhs: &'b $ty) -> $ty {
                std::ops::$Op::$op(&self, rhs)
            }
        }
        impl<'b, $($gen)*> std::ops::$OpAssign<&'b $ty> for $ty {
            fn $op_assign(&mut self, rhs: &'b $ty) {
                *self = std::ops::$Op::$op(&*self, rhs);
            }
        }
        impl<$($gen)*> std::ops::$OpAssign<$ty> for $ty {
            fn $op_assign(&mut self, rhs: $ty) {
                *self = std::ops::$Op::$op(&*self, &rhs);
            }
        }
    };
}

macro_rules! forward_ring_ops {
    ([$($gen:tt)*] $ty:ty) => {
        forward_binops!([$($gen)*] $ty, Add, add, AddAssign, add_assign);
        forward_binops!([$($gen)*] $ty, Sub, sub, SubAssign, sub_assign);
        forward_binops!([$($gen)*] $ty, Mul, mul, MulAssign, mul_assign);
        impl<$($gen)*> std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                std::ops::Neg::neg(&self)
            }
        }
    };
}
