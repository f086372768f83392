#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "annustitch/image.hpp"

namespace annustitch {

/// Decoded-frame listing for one video. Frames are image files on disk,
/// ordered by capture time; fps carries the timing the trims need. Produced
/// by an external extraction step (see README) or the phantom generator.
struct FrameManifest {
    std::string source_id;
    double fps = 0.0;
    std::vector<std::filesystem::path> frame_paths; // absolute after loading

    std::size_t frame_count() const { return frame_paths.size(); }
};

/// Keyframe policy plus, after select_keyframes, the chosen frame indices.
struct KeyframeSelection {
    double head_trim_s = 3.0;
    double tail_trim_s = 3.0;
    int stride = 5;
    std::vector<std::size_t> selected_indices;
};

/// Reads a manifest JSON ({"source_id", "fps", "frames": [...]}) and
/// resolves frame paths against the manifest's directory.
FrameManifest load_manifest(const std::filesystem::path& manifest_path);

/// Drops head_trim/tail_trim seconds from both ends (ceiling of
/// seconds*fps, so no frame inside a trimmed window survives) and samples
/// every `stride` frames from the kept window.
///
/// Throws InvalidFps when fps <= 0 and VideoTooShort when the video is no
/// longer than the two trims combined.
KeyframeSelection select_keyframes(const FrameManifest& manifest,
                                   const KeyframeSelection& params);

/// Loads an 8-bit grayscale or RGB PNG as a GrayImage. Color inputs are
/// reduced with luma weights 0.299/0.587/0.114; grayscale inputs are
/// value-preserving. Throws DecodeError for anything unreadable.
GrayImage load_gray(const std::filesystem::path& path);

/// Writes img as an 8-bit grayscale PNG (round-to-nearest quantization).
void save_gray(const std::filesystem::path& path, const GrayImage& img);

} // namespace annustitch
