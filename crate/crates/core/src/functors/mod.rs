//! Constructions between the models, each returning its output together with
//! a certificate of evidence.

pub mod certificate;
pub mod cone;
pub mod lambda;
pub mod m2;
pub mod psi;
pub mod simplicial;

pub use certificate::{certify_homotopy_preservation, FunctorCertificate, Homology, IsoWitness};
pub use cone::cone_functor;
pub use lambda::{lambda_functor, lambda_with, LambdaOptions};
pub use m2::m2_functor;
pub use psi::psi_functor;
pub use simplicial::{delta_functor, simp_to_2crossed};
