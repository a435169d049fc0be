#include "asqg/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace asqg {
namespace {

constexpr std::uint32_t kVersion = 1;
constexpr char kMagic[4] = {'A', 'S', 'Q', 'G'};

static_assert(std::endian::native == std::endian::little,
              "checkpoint writer assumes a little-endian host");

template <typename T>
void put(std::vector<std::uint8_t>& out, T v) {
  std::uint8_t buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.insert(out.end(), buf, buf + sizeof(T));
}

template <typename T>
T get(const std::vector<std::uint8_t>& in, size_t& off) {
  if (off + sizeof(T) > in.size()) {
    throw CheckpointError(CheckpointError::Kind::Truncated,
                          "checkpoint truncated at byte " + std::to_string(off));
  }
  T v;
  std::memcpy(&v, in.data() + off, sizeof(T));
  off += sizeof(T);
  return v;
}

}  // namespace

std::vector<std::uint8_t> save_checkpoint(const SolverState& state,
                                          const SimulationConfig& config) {
  const auto samples = from_spectral(state.theta);
  std::vector<std::uint8_t> out;
  out.reserve(4 + 4 + 8 + 5 * 8 + samples.size() * 8);
  out.insert(out.end(), kMagic, kMagic + 4);
  put<std::uint32_t>(out, kVersion);
  put<std::uint32_t>(out, std::uint32_t(state.theta.grid->n1()));
  put<std::uint32_t>(out, std::uint32_t(state.theta.grid->n2()));
  put<double>(out, state.t);
  put<double>(out, config.alpha);
  put<double>(out, config.beta);
  put<double>(out, config.mu);
  put<double>(out, config.nu);
  for (double v : samples) put<double>(out, v);
  return out;
}

LoadedCheckpoint load_checkpoint(const std::vector<std::uint8_t>& bytes) {
  size_t off = 0;
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw CheckpointError(CheckpointError::Kind::MagicMismatch,
                          "not a checkpoint file (bad magic)");
  }
  off = 4;
  const auto version = get<std::uint32_t>(bytes, off);
  if (version != kVersion) {
    throw CheckpointError(CheckpointError::Kind::VersionMismatch,
                          "unsupported checkpoint version " + std::to_string(version));
  }
  const auto n1 = get<std::uint32_t>(bytes, off);
  const auto n2 = get<std::uint32_t>(bytes, off);
  LoadedCheckpoint out;
  out.state.t = get<double>(bytes, off);
  out.alpha = get<double>(bytes, off);
  out.beta = get<double>(bytes, off);
  out.mu = get<double>(bytes, off);
  out.nu = get<double>(bytes, off);
  out.samples.resize(size_t(n1) * n2);
  for (auto& v : out.samples) v = get<double>(bytes, off);
  if (off != bytes.size()) {
    throw CheckpointError(CheckpointError::Kind::Truncated,
                          "trailing bytes after checkpoint payload");
  }
  out.state.theta = to_spectral(Grid::make(int(n1), int(n2)), out.samples);
  return out;
}

void write_checkpoint_file(const std::string& path, const SolverState& state,
                           const SimulationConfig& config) {
  const auto bytes = save_checkpoint(state, config);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw CheckpointError(CheckpointError::Kind::Io, "cannot open " + path);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            std::streamsize(bytes.size()));
  if (!out) throw CheckpointError(CheckpointError::Kind::Io, "write failed: " + path);
}

LoadedCheckpoint read_checkpoint_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError(CheckpointError::Kind::Io, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return load_checkpoint(bytes);
}

}  // namespace asqg
