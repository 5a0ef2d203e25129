#ifndef RINGFORGE_SYNTHGEN_HPP
#define RINGFORGE_SYNTHGEN_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ringforge/image.hpp"
#include "ringforge/prng.hpp"

namespace ringforge::synth {

// One concentric ring: radius and thickness in pixels, grayscale color in
// [0,255], and an azimuthal arc [theta_start, theta_end) in degrees where
// theta_end may exceed 360 to express arcs that wrap through 0.
struct RingSpec {
    double radius = 10.0;
    double thickness = 2.0;
    double color = 0.0;
    double theta_start = 0.0;
    double theta_end = 360.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double mid() const { return 0.5 * (lo + hi); }
};

// Sampling ranges for the five ring features plus the ring count used by
// the count-varying test datasets. All draws are uniform.
struct MaskParams {
    int num_rings = 4;
    Interval radius_range{4.0, 30.0};
    Interval thickness_range{1.0, 4.0};
    Interval color_range{0.0, 102.0}; // dark band; widen hi toward 255 for bright rings
    Interval theta_start_range{0.0, 360.0};
    Interval theta_span_range{90.0, 360.0};
    Interval count_range{1.0, 8.0};
    std::uint64_t seed = 0;

    // Radius ceiling tied to the frame so rings stay inside the inscribed disk.
    static MaskParams defaults_for(int height, int width);
};

void validate(const MaskParams& params);

struct PairEntry {
    std::string input;  // ringed image, relative to the manifest directory
    std::string target; // clean image, relative to the manifest directory
    int mask_id = 0;
    int clean_id = 0;
};

struct DatasetManifest {
    std::uint64_t seed = 0;
    double alpha = 0.7;
    int n_masks = 0;
    int n_clean = 0;
    MaskParams params;
    std::vector<PairEntry> pairs;
    std::filesystem::path base_dir; // directory of the manifest file; not serialized

    std::filesystem::path input_path(std::size_t i) const { return base_dir / pairs[i].input; }
    std::filesystem::path target_path(std::size_t i) const { return base_dir / pairs[i].target; }
};

void save_manifest(const DatasetManifest& m, const std::filesystem::path& path);
DatasetManifest load_manifest(const std::filesystem::path& path);

// Draws num_rings specs, each field uniform from its range in fixed order
// (radius, thickness, color, theta_start, theta_span).
std::vector<RingSpec> sample_rings(const MaskParams& params, Prng& g);

// Concentric rings on a white background. Pixel p belongs to ring k iff
// |dist(p,c) - radius_k| < thickness_k/2 and its angle lies in the arc;
// angle(p) = atan2(c_row - row, col - c_col) mapped to [0,360). Later rings
// overwrite earlier ones.
Image render_mask(const std::vector<RingSpec>& rings, int height, int width);

// Alpha-blend mask into clean wherever the mask has a ring pixel (< 1.0).
Image superimpose(const Image& clean, const Image& mask, double alpha);

// Renders n_masks masks (per-mask seed = params.seed + mask index) and writes
// every mask x clean superimposition plus manifest.json under out_dir.
DatasetManifest build_dataset(const std::filesystem::path& clean_dir, int n_masks,
                              const MaskParams& params, double alpha,
                              const std::filesystem::path& out_dir);

enum class TestVariant { radius, radius_thickness, radius_count };

const char* variant_name(TestVariant v);

// Ring lists for one test variant: the named features are sampled, everything
// else is pinned at its range midpoint. Radius always varies.
std::vector<std::vector<RingSpec>> make_variant_ring_lists(const MaskParams& params,
                                                           TestVariant variant, int n_masks);

// One Table-1-style test dataset (same tree layout as build_dataset).
DatasetManifest build_test_variant(const std::filesystem::path& clean_dir, TestVariant variant,
                                   const MaskParams& params, int n_masks, double alpha,
                                   const std::filesystem::path& out_dir);

} // namespace ringforge::synth

#endif
