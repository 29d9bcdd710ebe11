//! Scalar float math that works with and without `std`.

#[cfg(feature = "std")]
#[inline(always)]
pub fn exp(x: f64) -> f64 {
    x.exp()
}

#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn powf(base: f64, exponent: f64) -> f64 {
    base.powf(exponent)
}

#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn powf(base: f64, exponent: f64) -> f64 {
    libm::pow(base, exponent)
}
