#pragma once

// On-disk formats.
//
// Group spec (JSON):  {"family": "similitude"|"diagonal"|"shearlet",
//                      "c": number (shearlet only, required),
//                      "conjugator": [[a, b], [c, d]] (optional)}
//
// Signal, binary (little-endian):
//   "C2D1" | u16 version = 1 | u32 N | f64 L | N*N x (f64 re, f64 im), row-major
// Signal, CSV (chosen by the .csv extension): optional "# L=<extent>" line,
//   then N rows of 2N numbers, each complex cell written as re,im.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coorbit2d/grid.hpp"
#include "coorbit2d/group_model.hpp"

namespace coorbit2d {

inline constexpr std::uint16_t kSignalVersion = 1;
inline constexpr std::size_t kSignalHeaderBytes = 18;

GroupSpec parse_group_spec_text(std::string_view text);
GroupSpec parse_group_spec(const std::filesystem::path& path);
std::string group_spec_to_text(const GroupSpec& spec);

std::vector<std::uint8_t> encode_signal_binary(const GridSignal& s);
GridSignal decode_signal_binary(std::span<const std::uint8_t> bytes);
std::string encode_signal_csv(const GridSignal& s);
GridSignal decode_signal_csv(std::string_view text);

/// Format picked from the extension (.csv or binary otherwise).
GridSignal read_signal(const std::filesystem::path& path);
void write_signal(const std::filesystem::path& path, const GridSignal& s);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace coorbit2d
