#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgq/geometry.hpp"
#include "pgq/linalg.hpp"
#include "pgq/projspace.hpp"

namespace pgq {

/// x -> normalize(x^sigma * matrix), sigma = automorphism `auto_index`.
struct Collineation {
  Matrix matrix;
  int auto_index = 0;
};

/// PG(3,q) correlation: the point x goes to the plane with coefficient
/// vector x^sigma * matrix; a line goes to the intersection of the images
/// of its points.
struct Duality {
  Matrix matrix;
  int auto_index = 0;
};

/// Total map between the point sets of two geometries. The geometries are
/// not owned and must outlive the map. Entries are -1 where undefined
/// (only in partially reconstructed maps).
struct PointMap {
  const Geometry* source = nullptr;
  const Geometry* target = nullptr;
  std::vector<int> image;
};

/// Total map between line sets. Non-owning, like PointMap.
struct LineMap {
  const Geometry* source = nullptr;
  const Geometry* target = nullptr;
  std::vector<int> image;
};

/// (I) injective, (II) surjective, (III) collinear triples stay collinear,
/// (IV) non-collinear triples stay non-collinear.
///
/// A triple whose images are not pairwise distinct counts as having a
/// collinear image: it never violates (III) and always violates (IV) when
/// the source triple is non-collinear.
struct PropertyFlags {
  bool injective = false;
  bool surjective = false;
  bool collinear = false;
  bool noncollinear = false;
  bool operator==(const PropertyFlags&) const = default;
};

enum class MapClass { Collineation, Semicollineation, Embedding, Other };
const char* to_string(MapClass c);

PointMap collineation_point_map(const Collineation& c, const ProjSpace& src, const ProjSpace& tgt);

/// Point map of an injective semilinear map GF(q)^(n+1) -> GF(q)^(n'+1);
/// `matrix` is (n+1) x (n'+1) of full row rank. Throws IncompatibleSpaces.
PointMap semilinear_point_map(const Matrix& matrix, int auto_index, const ProjSpace& src,
                              const ProjSpace& tgt);

/// The line map with (AB)^beta = A^lambda B^lambda. Throws
/// NotLineConsistent when some line's point images collapse or are not
/// collinear.
LineMap induced_line_map(const PointMap& pm);

LineMap duality_line_map(const Duality& d, const ProjSpace& src, const ProjSpace& tgt);
/// Point -> plane id (see plane_id) under the duality.
std::vector<int> duality_plane_map(const Duality& d, const ProjSpace& src, const ProjSpace& tgt);

/// III is always evaluated exhaustively (over the triples on each line).
/// IV is exhaustive for at most kExhaustivePointLimit source points and
/// sampled over kPropertySamples seeded triples above that.
inline constexpr int kExhaustivePointLimit = 50;
inline constexpr int kPropertySamples = 100'000;
inline constexpr std::uint64_t kPropertySeed = 0x5EED0F1A5EED0F1AULL;

PropertyFlags check_properties(const PointMap& pm);
MapClass classify(const PropertyFlags& f);
MapClass classify_point_map(const PointMap& pm);

bool is_bijective(const LineMap& lm);
/// a ~ b implies a^beta ~ b^beta.
bool preserves_intersections(const LineMap& lm);
/// Skew pairs go to skew pairs.
bool preserves_skewness(const LineMap& lm);

/// inner first, then outer.
LineMap compose(const LineMap& outer, const LineMap& inner);

enum class KappaStatus { InducedIntoTarget, InducedIntoDual, Mixed };
const char* to_string(KappaStatus s);

struct KappaReport {
  KappaStatus status = KappaStatus::Mixed;
  /// Into the target (InducedIntoTarget, and the star-type points of a
  /// Mixed result) or into `dual_target` (InducedIntoDual); -1 where the
  /// star image had no common point.
  PointMap kappa;
  /// Owns the dual space of the target for InducedIntoDual.
  std::shared_ptr<const IncidenceStructure> dual_target;
  /// Source points whose star image has neither a common point nor (n = 3)
  /// a common plane.
  std::vector<int> skew_image_points;
  /// Target points whose star pulls back to a family of mutually skew lines
  /// rather than to a star; these are the points outside kappa's image.
  std::vector<int> skew_preimage_points;
  /// Every target star pulls back to a star or to a mutually skew family.
  bool star_dichotomy = true;
  std::string witness;
};

/// Recovers the inducing point map from the star images. Throws
/// PreconditionViolated unless lm is bijective and preserves intersections.
KappaReport reconstruct_point_map(const LineMap& lm);

struct StarRestriction {
  std::shared_ptr<const IncidenceStructure> source_quotient;
  std::shared_ptr<const IncidenceStructure> target_quotient;
  /// Between the quotient structures.
  PointMap map;
};

/// lm restricted to the star of `point`, as a map from the source quotient
/// at `point` to the quotient of kappa.target at kappa(point). kappa.target
/// must share line ids with lm.target (the target itself or its dual_space).
/// Throws PreconditionViolated if kappa is undefined at `point` or the star
/// image leaves the target star.
StarRestriction restrict_to_star(const LineMap& lm, int point, const PointMap& kappa);

/// A line skew to c that meets a and b, if one exists. a, b, c must be
/// distinct lines through `point` (NotInStar otherwise).
std::optional<int> noncollinear_witness(const ProjSpace& sp, int point, int a, int b, int c);

/// The lines have one common point and form a full pencil in `g`.
bool is_pencil(const Geometry& g, std::vector<int> lines);

/// The image of pencil(point, eps) is a pencil of lm.target. lm.source must
/// be a ProjSpace.
bool pencil_image_is_pencil(const LineMap& lm, int point, const Subspace& eps);

/// (l meet a)^kappa == l^beta meet a^beta for every l in pencil(point, eps),
/// with the right-hand meet taken in kappa.target. Throws BadConfiguration
/// unless a lies in eps and misses `point`.
bool intersection_compatibility_check(const LineMap& lm, const PointMap& kappa, int point,
                                      const Subspace& eps, int a);

}  // namespace pgq
