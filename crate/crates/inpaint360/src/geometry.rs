//! Cameras, rays, projection and backprojection.
//!
//! Conventions (fixed once, asserted by tests):
//!
//! * cameras store the camera-to-world rigid transform;
//! * camera space looks down −z, x right, y up; image v grows downward;
//! * continuous pixel coordinates use the pixel-center convention
//!   (integer pixel `i` has center `i + 0.5`);
//! * [`Camera::project`] returns z-depth (distance along the view axis),
//!   while ray sampling works in ray-parameter depth; conversions between
//!   the two are explicit ([`Camera::z_from_ray_depth`]).

use nalgebra::{Matrix3, Matrix4, Point3, Vector3};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("camera rotation block is not orthonormal (max deviation {0:.3e})")]
    NotOrthonormal(f64),
    #[error("camera matrix last row must be [0,0,0,1]")]
    BadLastRow,
    #[error("focal lengths must be positive, got ({0}, {1})")]
    BadFocal(f64, f64),
    #[error("principal point ({0}, {1}) outside image bounds {2}x{3}")]
    PrincipalOutOfBounds(f64, f64, u32, u32),
    #[error("camera file: {0}")]
    File(String),
}

/// Continuous pixel coordinate; integer pixel `i` has center `i + 0.5`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PixelCoord {
    pub u: f64,
    pub v: f64,
}

impl PixelCoord {
    pub fn new(u: f64, v: f64) -> Self {
        Self { u, v }
    }

    /// Center of the integer pixel (ix, iy).
    pub fn center(ix: u32, iy: u32) -> Self {
        Self {
            u: f64::from(ix) + 0.5,
            v: f64::from(iy) + 0.5,
        }
    }
}

/// A world-space ray with unit direction.
#[derive(Debug, Clone, Copy)]
pub struct Ray {
    pub origin: Point3<f64>,
    pub dir: Vector3<f64>,
}

impl Ray {
    /// World point at ray-parameter depth `t` (`origin + t * dir`).
    pub fn point_at(&self, t: f64) -> Point3<f64> {
        self.origin + self.dir * t
    }
}

/// Result of projecting a world point into a camera.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Projection {
    /// Pixel coordinate and positive z-depth along the view axis.
    Visible { px: PixelCoord, z: f64 },
    /// The point lies at or behind the camera plane.
    Behind,
}

impl Projection {
    pub fn visible(self) -> Option<(PixelCoord, f64)> {
        match self {
            Projection::Visible { px, z } => Some((px, z)),
            Projection::Behind => None,
        }
    }
}

/// Pinhole camera: intrinsics plus a camera-to-world pose.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Camera {
    pub width: u32,
    pub height: u32,
    pub fx: f64,
    pub fy: f64,
    pub cx: f64,
    pub cy: f64,
    /// Rigid camera-to-world transform; rotation orthonormal, last row [0,0,0,1].
    pub cam_to_world: Matrix4<f64>,
}

const ORTHONORMAL_TOL: f64 = 1e-6;

impl Camera {
    pub fn new(
        width: u32,
        height: u32,
        fx: f64,
        fy: f64,
        cx: f64,
        cy: f64,
        cam_to_world: Matrix4<f64>,
    ) -> Result<Self, GeometryError> {
        if fx <= 0.0 || fy <= 0.0 {
            return Err(GeometryError::BadFocal(fx, fy));
        }
        if cx < 0.0 || cx > f64::from(width) || cy < 0.0 || cy > f64::from(height) {
            return Err(GeometryError::PrincipalOutOfBounds(cx, cy, width, height));
        }
        let last = cam_to_world.row(3);
        if last[0] != 0.0 || last[1] != 0.0 || last[2] != 0.0 || last[3] != 1.0 {
            return Err(GeometryError::BadLastRow);
        }
        let r = cam_to_world.fixed_view::<3, 3>(0, 0).into_owned();
        let dev = (r.transpose() * r - Matrix3::identity()).abs().max();
        if dev >= ORTHONORMAL_TOL {
            return Err(GeometryError::NotOrthonormal(dev));
        }
        Ok(Self {
            width,
            height,
            fx,
            fy,
            cx,
            cy,
            cam_to_world,
        })
    }

    /// Camera with identity pose (center at origin, looking down −z).
    pub fn identity_pose(width: u32, height: u32, fx: f64, fy: f64, cx: f64, cy: f64) -> Self {
        Self::new(width, height, fx, fy, cx, cy, Matrix4::identity()).expect("identity pose")
    }

    /// Look-at pose: camera at `eye` viewing `target` with the given up hint.
    pub fn look_at(
        width: u32,
        height: u32,
        fx: f64,
        fy: f64,
        cx: f64,
        cy: f64,
        eye: Point3<f64>,
        target: Point3<f64>,
        up: Vector3<f64>,
    ) -> Result<Self, GeometryError> {
        // Camera z points backward (away from the target).
        let z = (eye - target).normalize();
        let x = up.cross(&z).normalize();
        let y = z.cross(&x);
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 1>(0, 0).copy_from(&x);
        m.fixed_view_mut::<3, 1>(0, 1).copy_from(&y);
        m.fixed_view_mut::<3, 1>(0, 2).copy_from(&z);
        m.fixed_view_mut::<3, 1>(0, 3).copy_from(&eye.coords);
        Self::new(width, height, fx, fy, cx, cy, m)
    }

    pub fn rotation(&self) -> Matrix3<f64> {
        self.cam_to_world.fixed_view::<3, 3>(0, 0).into_owned()
    }

    /// Camera center in world coordinates.
    pub fn center(&self) -> Point3<f64> {
        Point3::from(self.cam_to_world.fixed_view::<3, 1>(0, 3).into_owned())
    }

    /// World-space view axis (the −z camera axis).
    pub fn forward(&self) -> Vector3<f64> {
        -self.rotation().column(2)
    }

    /// World ray through a (possibly out-of-bounds) pixel coordinate.
    pub fn pixel_to_ray(&self, px: PixelCoord) -> Ray {
        let d_cam = Vector3::new(
            (px.u - self.cx) / self.fx,
            -(px.v - self.cy) / self.fy,
            -1.0,
        );
        let dir = (self.rotation() * d_cam).normalize();
        Ray {
            origin: self.center(),
            dir,
        }
    }

    /// Projects a world point to pixel coordinates and z-depth.
    pub fn project(&self, point: &Point3<f64>) -> Projection {
        let local = self.rotation().transpose() * (point - self.center());
        let z = -local.z;
        if z <= 0.0 {
            return Projection::Behind;
        }
        Projection::Visible {
            px: PixelCoord::new(
                self.cx + self.fx * local.x / z,
                self.cy - self.fy * local.y / z,
            ),
            z,
        }
    }

    /// Converts ray-parameter depth along `ray` to z-depth in this camera.
    pub fn z_from_ray_depth(&self, ray: &Ray, t: f64) -> f64 {
        t * ray.dir.dot(&self.forward())
    }

    pub fn contains(&self, px: PixelCoord) -> bool {
        px.u >= 0.0 && px.v >= 0.0 && px.u < f64::from(self.width) && px.v < f64::from(self.height)
    }
}

/// World point at ray-parameter depth `t` along `ray`.
pub fn point_from_depth(ray: &Ray, t: f64) -> Point3<f64> {
    debug_assert!(t >= 0.0, "negative depth {t}");
    ray.point_at(t)
}

// ---------------------------------------------------------------------------
// Camera file: one structured-text document per scene, keyed by view index.
// f64 values round-trip bit-exactly through the shortest-decimal encoding.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CameraRecord {
    width: u32,
    height: u32,
    fx: f64,
    fy: f64,
    cx: f64,
    cy: f64,
    /// Row-major 16-entry cam_to_world matrix.
    cam_to_world: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CameraFile {
    views: BTreeMap<u32, CameraRecord>,
}

pub fn save_cameras(path: &Path, cameras: &[Camera]) -> Result<(), GeometryError> {
    let views = cameras
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let m = c.cam_to_world.transpose(); // nalgebra is column-major
            (
                i as u32,
                CameraRecord {
                    width: c.width,
                    height: c.height,
                    fx: c.fx,
                    fy: c.fy,
                    cx: c.cx,
                    cy: c.cy,
                    cam_to_world: m.as_slice().to_vec(),
                },
            )
        })
        .collect();
    let text = serde_json::to_string_pretty(&CameraFile { views })
        .map_err(|e| GeometryError::File(e.to_string()))?;
    std::fs::write(path, text).map_err(|e| GeometryError::File(e.to_string()))
}

pub fn load_cameras(path: &Path) -> Result<Vec<Camera>, GeometryError> {
    let text = std::fs::read_to_string(path).map_err(|e| GeometryError::File(e.to_string()))?;
    let file: CameraFile =
        serde_json::from_str(&text).map_err(|e| GeometryError::File(e.to_string()))?;
    let mut cameras = Vec::with_capacity(file.views.len());
    for (idx, (key, rec)) in file.views.iter().enumerate() {
        if *key != idx as u32 {
            return Err(GeometryError::File(format!(
                "view indices must be contiguous from 0, found {key} at position {idx}"
            )));
        }
        if rec.cam_to_world.len() != 16 {
            return Err(GeometryError::File(format!(
                "view {key}: expected 16 matrix entries, got {}",
                rec.cam_to_world.len()
            )));
        }
        let m = Matrix4::from_row_slice(&rec.cam_to_world);
        cameras.push(Camera::new(
            rec.width, rec.height, rec.fx, rec.fy, rec.cx, rec.cy, m,
        )?);
    }
    Ok(cameras)
}
