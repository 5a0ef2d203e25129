#include "ringforge/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "ringforge/io.hpp"

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace ringforge::synth {
namespace {

std::string zero_pad(int v, int width) {
    std::string s = std::to_string(v);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

std::vector<fs::path> list_pgm_sorted(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError("clean image directory not found: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".pgm")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

json interval_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

json params_json(const MaskParams& p) {
    return json{{"num_rings", p.num_rings},
                {"radius_range", interval_json(p.radius_range)},
                {"thickness_range", interval_json(p.thickness_range)},
                {"color_range", interval_json(p.color_range)},
                {"theta_start_range", interval_json(p.theta_start_range)},
                {"theta_span_range", interval_json(p.theta_span_range)},
                {"count_range", interval_json(p.count_range)}};
}

// Shared writer for build_dataset and the test variants: renders the given
// ring lists, superimposes them over every clean image and writes the tree.
DatasetManifest write_pair_tree(const fs::path& clean_dir,
                                const std::vector<std::vector<RingSpec>>& ring_lists,
                                const MaskParams& params, double alpha, const fs::path& out_dir) {
    const auto clean_files = list_pgm_sorted(clean_dir);
    if (clean_files.empty())
        throw ValidationError("build_dataset: no .pgm images in " + clean_dir.string());

    std::vector<Image> clean;
    clean.reserve(clean_files.size());
    for (const auto& f : clean_files) clean.push_back(load_pgm(f));
    for (const auto& img : clean)
        if (!img.same_shape(clean.front()))
            throw ValidationError("build_dataset: clean images must share dimensions");

    const int height = clean.front().height;
    const int width = clean.front().width;

    std::error_code ec;
    fs::create_directories(out_dir / "inputs", ec);
    fs::create_directories(out_dir / "targets", ec);
    fs::create_directories(out_dir / "masks", ec);
    if (!fs::is_directory(out_dir / "inputs"))
        throw IoError("cannot create output directory: " + out_dir.string());

    DatasetManifest m;
    m.seed = params.seed;
    m.alpha = alpha;
    m.n_masks = static_cast<int>(ring_lists.size());
    m.n_clean = static_cast<int>(clean.size());
    m.params = params;
    m.base_dir = out_dir;

    for (std::size_t c = 0; c < clean.size(); ++c)
        save_pgm(clean[c], out_dir / "targets" / ("c" + zero_pad(static_cast<int>(c), 3) + ".pgm"));

    for (std::size_t k = 0; k < ring_lists.size(); ++k) {
        const Image mask = render_mask(ring_lists[k], height, width);
        const std::string mask_name = "m" + zero_pad(static_cast<int>(k), 3);
        save_pgm(mask, out_dir / "masks" / (mask_name + ".pgm"));
        for (std::size_t c = 0; c < clean.size(); ++c) {
            const std::string clean_name = "c" + zero_pad(static_cast<int>(c), 3);
            const Image ringed = superimpose(clean[c], mask, alpha);
            const std::string input_rel = "inputs/" + mask_name + "_" + clean_name + ".pgm";
            save_pgm(ringed, out_dir / input_rel);
            m.pairs.push_back(PairEntry{input_rel, "targets/" + clean_name + ".pgm",
                                        static_cast<int>(k), static_cast<int>(c)});
        }
    }

    save_manifest(m, out_dir / "manifest.json");
    return m;
}

} // namespace

MaskParams MaskParams::defaults_for(int height, int width) {
    MaskParams p;
    const double limit = std::min(height, width) / 2.0 - 2.0;
    p.radius_range = Interval{4.0, std::max(4.0, limit)};
    return p;
}

void validate(const MaskParams& p) {
    auto check = [](const Interval& iv, const char* name) {
        if (!(iv.lo <= iv.hi))
            throw ValidationError(std::string("mask params: empty ") + name + " range");
    };
    if (p.num_rings < 0) throw ValidationError("mask params: negative ring count");
    check(p.radius_range, "radius");
    check(p.thickness_range, "thickness");
    check(p.color_range, "color");
    check(p.theta_start_range, "theta_start");
    check(p.theta_span_range, "theta_span");
    check(p.count_range, "count");
    if (p.radius_range.lo <= 0.0) throw ValidationError("mask params: radius must be positive");
    if (p.thickness_range.lo <= 0.0)
        throw ValidationError("mask params: thickness must be positive");
    // Every sampled spec must satisfy thickness <= radius.
    if (p.thickness_range.hi > p.radius_range.lo)
        throw ValidationError("mask params: thickness range exceeds smallest radius");
    if (p.color_range.lo < 0.0 || p.color_range.hi > 255.0)
        throw ValidationError("mask params: color range outside [0,255]");
    if (p.theta_start_range.lo < 0.0 || p.theta_start_range.lo >= 360.0 ||
        p.theta_start_range.hi > 360.0)
        throw ValidationError("mask params: theta_start range outside [0,360)");
    if (p.theta_span_range.lo <= 0.0 || p.theta_span_range.hi > 360.0)
        throw ValidationError("mask params: theta_span range outside (0,360]");
    if (p.count_range.lo < 0.0)
        throw ValidationError("mask params: negative count range");
}

std::vector<RingSpec> sample_rings(const MaskParams& params, Prng& g) {
    validate(params);
    std::vector<RingSpec> rings;
    rings.reserve(params.num_rings);
    for (int k = 0; k < params.num_rings; ++k) {
        RingSpec r;
        r.radius = g.uniform(params.radius_range.lo, params.radius_range.hi);
        r.thickness = g.uniform(params.thickness_range.lo, params.thickness_range.hi);
        r.color = g.uniform(params.color_range.lo, params.color_range.hi);
        r.theta_start = g.uniform(params.theta_start_range.lo, params.theta_start_range.hi);
        const double span = g.uniform(params.theta_span_range.lo, params.theta_span_range.hi);
        r.theta_end = r.theta_start + span;
        rings.push_back(r);
    }
    return rings;
}

Image render_mask(const std::vector<RingSpec>& rings, int height, int width) {
    Image mask(height, width, 1.0);
    const double c_row = (height - 1) / 2.0;
    const double c_col = (width - 1) / 2.0;
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            const double dy = c_row - row; // y axis points up
            const double dx = col - c_col;
            const double dist = std::hypot(dx, dy);
            double angle = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
            if (angle < 0.0) angle += 360.0;
            for (const RingSpec& r : rings) {
                if (std::abs(dist - r.radius) >= r.thickness / 2.0) continue;
                const bool in_arc = r.theta_end <= 360.0
                                        ? (angle >= r.theta_start && angle < r.theta_end)
                                        : (angle >= r.theta_start || angle < r.theta_end - 360.0);
                if (in_arc) mask.at(row, col) = r.color / 255.0;
            }
        }
    }
    return mask;
}

Image superimpose(const Image& clean, const Image& mask, double alpha) {
    require_same_shape(clean, mask, "superimpose");
    if (alpha < 0.0 || alpha > 1.0) throw ValidationError("superimpose: alpha outside [0,1]");
    Image out = clean;
    for (std::size_t i = 0; i < out.data.size(); ++i)
        if (mask.data[i] < 1.0)
            out.data[i] = (1.0 - alpha) * clean.data[i] + alpha * mask.data[i];
    return out;
}

DatasetManifest build_dataset(const fs::path& clean_dir, int n_masks, const MaskParams& params,
                              double alpha, const fs::path& out_dir) {
    validate(params);
    if (n_masks <= 0) throw ValidationError("build_dataset: n_masks must be positive");
    if (alpha < 0.0 || alpha > 1.0) throw ValidationError("build_dataset: alpha outside [0,1]");
    std::vector<std::vector<RingSpec>> ring_lists;
    ring_lists.reserve(n_masks);
    for (int k = 0; k < n_masks; ++k) {
        Prng g(params.seed + static_cast<std::uint64_t>(k));
        ring_lists.push_back(sample_rings(params, g));
    }
    return write_pair_tree(clean_dir, ring_lists, params, alpha, out_dir);
}

const char* variant_name(TestVariant v) {
    switch (v) {
        case TestVariant::radius: return "radius";
        case TestVariant::radius_thickness: return "radius_thickness";
        case TestVariant::radius_count: return "radius_count";
    }
    throw ValidationError("unknown test variant");
}

std::vector<std::vector<RingSpec>> make_variant_ring_lists(const MaskParams& params,
                                                           TestVariant variant, int n_masks) {
    validate(params);
    if (n_masks <= 0) throw ValidationError("test variant: n_masks must be positive");

    // Pin everything at midpoints, then re-open the ranges the variant samples.
    MaskParams pinned = params;
    pinned.thickness_range = Interval{params.thickness_range.mid(), params.thickness_range.mid()};
    pinned.color_range = Interval{params.color_range.mid(), params.color_range.mid()};
    pinned.theta_start_range =
        Interval{params.theta_start_range.mid(), params.theta_start_range.mid()};
    pinned.theta_span_range =
        Interval{params.theta_span_range.mid(), params.theta_span_range.mid()};
    if (variant == TestVariant::radius_thickness) pinned.thickness_range = params.thickness_range;

    std::vector<std::vector<RingSpec>> lists;
    lists.reserve(n_masks);
    for (int k = 0; k < n_masks; ++k) {
        Prng g(params.seed + static_cast<std::uint64_t>(k));
        MaskParams per_mask = pinned;
        if (variant == TestVariant::radius_count) {
            // First draw decides the ring count; remaining draws fill the specs.
            const double u = g.uniform(params.count_range.lo, params.count_range.hi + 1.0);
            per_mask.num_rings = std::clamp(static_cast<int>(std::floor(u)),
                                            static_cast<int>(std::ceil(params.count_range.lo)),
                                            static_cast<int>(std::floor(params.count_range.hi)));
        }
        lists.push_back(sample_rings(per_mask, g));
    }
    return lists;
}

DatasetManifest build_test_variant(const fs::path& clean_dir, TestVariant variant,
                                   const MaskParams& params, int n_masks, double alpha,
                                   const fs::path& out_dir) {
    const auto lists = make_variant_ring_lists(params, variant, n_masks);
    return write_pair_tree(clean_dir, lists, params, alpha, out_dir);
}

void save_manifest(const DatasetManifest& m, const fs::path& path) {
    json pairs = json::array();
    for (const auto& p : m.pairs)
        pairs.push_back(json{{"input", p.input},
                             {"target", p.target},
                             {"mask_id", p.mask_id},
                             {"clean_id", p.clean_id}});
    const json doc{{"seed", m.seed},
                   {"alpha", m.alpha},
                   {"n_masks", m.n_masks},
                   {"n_clean", m.n_clean},
                   {"params", params_json(m.params)},
                   {"pairs", pairs}};
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write manifest: " + path.string());
    out << doc.dump(2) << "\n";
}

DatasetManifest load_manifest(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read manifest: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError("manifest: invalid JSON: " + std::string(e.what()));
    }
    DatasetManifest m;
    try {
        m.seed = doc.at("seed").get<std::uint64_t>();
        m.alpha = doc.at("alpha").get<double>();
        m.n_masks = doc.value("n_masks", 0);
        m.n_clean = doc.value("n_clean", 0);
        if (doc.contains("params")) {
            const json& pj = doc["params"];
            auto iv = [&](const char* key, Interval fallback) {
                if (!pj.contains(key)) return fallback;
                return Interval{pj[key][0].get<double>(), pj[key][1].get<double>()};
            };
            m.params.num_rings = pj.value("num_rings", m.params.num_rings);
            m.params.radius_range = iv("radius_range", m.params.radius_range);
            m.params.thickness_range = iv("thickness_range", m.params.thickness_range);
            m.params.color_range = iv("color_range", m.params.color_range);
            m.params.theta_start_range = iv("theta_start_range", m.params.theta_start_range);
            m.params.theta_span_range = iv("theta_span_range", m.params.theta_span_range);
            m.params.count_range = iv("count_range", m.params.count_range);
            m.params.seed = m.seed;
        }
        for (const auto& p : doc.at("pairs")) {
            m.pairs.push_back(PairEntry{p.at("input").get<std::string>(),
                                        p.at("target").get<std::string>(),
                                        p.at("mask_id").get<int>(), p.at("clean_id").get<int>()});
        }
    } catch (const json::exception& e) {
        throw ValidationError("manifest: missing or mistyped field: " + std::string(e.what()));
    }
    m.base_dir = path.parent_path();
    return m;
}

} // namespace ringforge::synth
