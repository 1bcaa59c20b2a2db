pub mod check;
pub mod enumerate;
pub mod psi;
pub mod solve;
