//! Scalar sequences: generalized Euler polynomials and numbers, classical
//! Euler numbers, Fibonacci, Lucas, Stirling numbers and helper polynomials.

mod connections;
mod euler;
mod integer;

pub use connections::{
    euler_poly_via_stirling_composite, euler_poly_via_stirling_composite_with, euler_poly_via_stirling_first,
    euler_poly_via_stirling_first_with, euler_poly_via_stirling_second, euler_poly_via_stirling_second_with,
};
pub use euler::{
    classical_euler_number, classical_euler_numbers, euler_number, euler_poly_table, gen_euler_number,
    gen_euler_poly, series_coeffs, EulerPolyTable, SeriesCoeffs,
};
pub use integer::{
    alternating_count, alternating_count_with, fibonacci, helper_m, helper_n, lucas, stirling_first,
    stirling_first_table, stirling_second, ALTERNATING_MAX,
};
