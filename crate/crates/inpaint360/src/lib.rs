//! Text-driven object removal for dense-voxel radiance fields.
//!
//! The crate trains a differentiable voxel radiance field from posed views,
//! produces multiview-consistent object masks via depth-warping prompt
//! refinement, retrains the field on (simulated or externally supplied)
//! 2D inpaintings, and finetunes it with an occupancy-diffusion geometric
//! prior plus a patch-perceptual appearance prior to remove floater
//! artifacts from the inpainted region.
//!
//! Modules map one-to-one onto the subsystems:
//!
//! * [`geometry`] — cameras, rays, projection, backprojection.
//! * [`field`] — the voxel radiance field: rendering, explicit gradients,
//!   optimizer, training loop, checkpoints.
//! * [`scene_synth`] — procedural ground-truth scenes, paired with/without
//!   renders, imperfect box proposals, and a simulated 2D inpainter.
//! * [`segment`] — instruction parsing, prompt seeding, the promptable
//!   oracle segmenter, and depth-warp mask refinement.
//! * [`shape_prior`] — occupancy cubes, the DDPM noise schedule and
//!   denoiser, DSDS scoring, and the visibility-masked geometric loss.
//! * [`perceptual`] — patch partitioning, pixel loss, the fixed multi-scale
//!   perceptual distance, and total-loss assembly.
//! * [`pipeline`] — staged orchestration, configuration, manifests,
//!   finetuning, and evaluation.

pub mod field;
pub mod geometry;
pub mod img;
pub mod perceptual;
pub mod pipeline;
pub mod rng;
pub mod scene_synth;
pub mod segment;
pub mod shape_prior;
