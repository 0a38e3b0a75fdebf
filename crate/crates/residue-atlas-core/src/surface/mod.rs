//! Flat-surface witnesses as nets of polygons and half-infinite pieces.

mod build;
mod c1c2;
mod coord;
mod net;
mod ops;
mod polar;
mod random;
mod verify;

pub use build::{
    build_from_connection_graph, build_one_zero_genus0, polygon_example_net, principal_root, residual_polygon_net,
    residue_slots, PoleSpec,
};
pub use c1c2::construct_c1_c2;
pub use coord::{Coord, Scalar};
pub use net::{glue, ConePoint, Corner, EdgeKind, EdgeRef, FlatSurface, Identification, Invariants, Piece, PoleEnd};
pub use ops::{break_zero, sew_handle};
pub use polar::{make_polar_part, make_polar_part_along, Attached, NetBuilder, PartNet, PolarKind, PolarPart};
pub use random::{random_gluing, RandomGluing};
pub use verify::{verify_surface, VerifyReport};
