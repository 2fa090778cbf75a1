pub mod curveimpl;
pub mod exactalg;
pub mod surfimpl;
pub mod trigsupport;
