//! Branched spherical CR structures on hyperbolic once-punctured torus
//! bundles, built from a monodromy word and certified with exact arithmetic
//! over the Eisenstein field.

pub mod celldecomp;
pub mod cli;
pub mod crgeom;
pub mod exactnum;
pub mod flipword;
pub mod montri;
pub mod realise;
