#include "annustitch/ingest.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "annustitch/error.hpp"

namespace annustitch {

FrameManifest load_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open manifest " + manifest_path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidConfig,
                    "manifest " + manifest_path.string() + ": " + e.what());
    }

    if (!doc.is_object() || !doc.contains("source_id") || !doc.contains("fps") ||
        !doc.contains("frames")) {
        throw Error(ErrorCode::InvalidConfig,
                    "manifest requires keys source_id, fps, frames");
    }
    for (const auto& item : doc.items()) {
        if (item.key() != "source_id" && item.key() != "fps" && item.key() != "frames") {
            throw Error(ErrorCode::InvalidConfig, "manifest: unknown key '" + item.key() + "'");
        }
    }

    FrameManifest manifest;
    if (!doc["source_id"].is_string() || !doc["fps"].is_number() || !doc["frames"].is_array()) {
        throw Error(ErrorCode::InvalidConfig, "manifest: wrong field types");
    }
    manifest.source_id = doc["source_id"].get<std::string>();
    manifest.fps = doc["fps"].get<double>();
    if (!(manifest.fps > 0.0)) {
        throw Error(ErrorCode::InvalidFps, "manifest fps must be > 0");
    }

    const auto base = manifest_path.parent_path();
    std::set<std::string> seen;
    for (const auto& entry : doc["frames"]) {
        if (!entry.is_string()) {
            throw Error(ErrorCode::InvalidConfig, "manifest frames must be strings");
        }
        const std::string rel = entry.get<std::string>();
        if (!seen.insert(rel).second) {
            throw Error(ErrorCode::InvalidConfig, "manifest: duplicate frame path " + rel);
        }
        std::filesystem::path p(rel);
        manifest.frame_paths.push_back(p.is_absolute() ? p : base / p);
    }
    return manifest;
}

KeyframeSelection select_keyframes(const FrameManifest& manifest,
                                   const KeyframeSelection& params) {
    if (!(manifest.fps > 0.0)) {
        throw Error(ErrorCode::InvalidFps, "fps must be > 0");
    }
    if (params.stride < 1) {
        throw Error(ErrorCode::InvalidArgument, "stride must be >= 1");
    }
    if (params.head_trim_s < 0.0 || params.tail_trim_s < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "trims must be >= 0");
    }

    const double duration = static_cast<double>(manifest.frame_count()) / manifest.fps;
    if (!(duration > params.head_trim_s + params.tail_trim_s)) {
        throw Error(ErrorCode::VideoTooShort,
                    "duration " + std::to_string(duration) + "s <= trims " +
                        std::to_string(params.head_trim_s + params.tail_trim_s) + "s");
    }

    const auto first_kept =
        static_cast<std::int64_t>(std::ceil(params.head_trim_s * manifest.fps));
    const auto last_kept = static_cast<std::int64_t>(manifest.frame_count()) - 1 -
                           static_cast<std::int64_t>(std::ceil(params.tail_trim_s * manifest.fps));

    KeyframeSelection out = params;
    out.selected_indices.clear();
    for (std::int64_t i = first_kept; i <= last_kept; i += params.stride) {
        out.selected_indices.push_back(static_cast<std::size_t>(i));
    }
    return out;
}

} // namespace annustitch
