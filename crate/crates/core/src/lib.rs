pub mod codes;
pub mod gf;
pub mod linalg;
pub mod linpoly;
pub mod parallel;
pub mod trinomial;
pub mod verify;
