/*
 * Copyright 2026 The hss Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hss/access_structure.hpp"
#include "hss/error.hpp"
#include "hss/hash.hpp"
#include "hss/herding.hpp"
#include "hss/random.hpp"
#include "hss/scheme.hpp"
#include "hss/shamir.hpp"
#include "hss/storage.hpp"

namespace hss::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

/// Carries an explicit exit code out of a command.
struct Exit {
  int code;
  std::string message;
};

struct GlobalOptions {
  std::string hash = "sha256";
  std::optional<std::uint64_t> seed;
  bool json = false;
};

std::unique_ptr<RandomSource> make_rng(const GlobalOptions& g) {
  if (g.seed) return std::make_unique<SeededRandom>(*g.seed);
  return std::make_unique<SystemRandom>();
}

std::vector<unsigned> parse_uint_list(std::string_view text, const char* what) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Exit{kUsage, std::string("cannot parse ") + what + ": '" + std::string(text) + "'"};
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text, const char* what) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Exit{kUsage, std::string("cannot parse ") + what + ": '" + std::string(text) + "'"};
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

// "1,2|3,4|5,6" -> {{1,2},{3,4},{5,6}}
std::vector<std::vector<ParticipantId>> parse_groups(std::string_view text, const char* what) {
  std::vector<std::vector<ParticipantId>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('|', pos), text.size());
    const std::string_view group = text.substr(pos, end - pos);
    std::vector<ParticipantId> ids;
    if (!group.empty()) {
      for (unsigned v : parse_uint_list(group, what)) ids.push_back(v);
    }
    out.push_back(std::move(ids));
    pos = end + 1;
  }
  return out;
}

std::string hex_width(std::uint64_t v, unsigned bits) {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(static_cast<int>((bits + 3) / 4)) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// setup / recover / refresh / verify

struct SetupArgs {
  std::string basis_file;
  std::string threshold;
  std::string hierarchical;
  std::string k;
  bool disjunctive = false;
  std::string compartment;
  std::string ti;
  unsigned t = 0;
  unsigned n = 0;
  std::string secret_hex;
  std::string secret_passphrase;
  bool no_commitments = false;
  bool parallel = false;
  std::string out_dir = ".";
};

Basis build_structure(const SetupArgs& a, std::ostream& err) {
  const int chosen = !a.basis_file.empty() + !a.threshold.empty() + !a.hierarchical.empty() + !a.compartment.empty();
  if (chosen != 1) {
    throw Exit{kUsage, "choose exactly one of --basis, --threshold, --hierarchical, --compartment"};
  }
  const std::optional<unsigned> n = a.n > 0 ? std::optional<unsigned>(a.n) : std::nullopt;
  try {
    if (!a.basis_file.empty()) {
      return basis_from_json(storage::read_file(a.basis_file), n);
    }
    if (!a.threshold.empty()) {
      const auto v = parse_uint_list(a.threshold, "--threshold");
      if (v.size() != 2) throw Exit{kUsage, "--threshold expects t+1,n"};
      return threshold_basis(v[0], v[1]);
    }
    if (!a.hierarchical.empty()) {
      if (a.k.empty()) throw Exit{kUsage, "--hierarchical requires --k"};
      HierarchicalSpec spec{parse_groups(a.hierarchical, "--hierarchical"), parse_uint_list(a.k, "--k"),
                            a.disjunctive ? HierarchyMode::disjunctive : HierarchyMode::conjunctive, n};
      for (const auto& w : validate(spec)) err << "warning: " << w << "\n";
      return hierarchical_basis(spec);
    }
    if (a.ti.empty() || a.t == 0) throw Exit{kUsage, "--compartment requires --ti and --t"};
    CompartmentSpec spec{parse_groups(a.compartment, "--compartment"), parse_uint_list(a.ti, "--ti"), a.t, n};
    return compartment_basis(spec);
  } catch (const FormatError& e) {
    throw Exit{kUsage, std::string("invalid structure: ") + e.what()};
  } catch (const InvalidArgument& e) {
    throw Exit{kUsage, std::string("invalid structure: ") + e.what()};
  }
}

fs::path share_path(const fs::path& dir, ParticipantId id) { return dir / ("share_" + std::to_string(id) + ".json"); }

std::vector<fs::path> write_outputs(const fs::path& dir, const storage::ControlAreaFile& control,
                                    const std::vector<Share>& shares) {
  fs::create_directories(dir);
  std::vector<fs::path> written;
  // Shares first: an interrupted run leaves at most new-version shares next
  // to the old control area, which the version gate rejects.
  for (const auto& s : shares) {
    const fs::path p = share_path(dir, s.participant);
    storage::write_file_atomic(p, storage::emit(storage::ShareFile{control.scheme_id, control.area.version, s}));
    written.push_back(p);
  }
  const fs::path cp = dir / "control.json";
  storage::write_file_atomic(cp, storage::emit(control));
  written.push_back(cp);
  return written;
}

void report_dealer(const GlobalOptions& g, const storage::ControlAreaFile& control, const SecretDigest& secret,
                   const std::vector<fs::path>& files, std::ostream& out) {
  if (g.json) {
    ordered_json j;
    j["scheme_id"] = control.scheme_id;
    j["version"] = control.area.version;
    j["entries"] = control.area.entries.size();
    j["secret"] = to_hex(secret.bytes);
    j["files"] = ordered_json::array();
    for (const auto& f : files) j["files"].push_back(f.string());
    out << j.dump(2) << "\n";
  } else {
    out << to_hex(secret.bytes) << "\n";
  }
}

int cmd_setup(const GlobalOptions& g, const SetupArgs& a, std::ostream& out, std::ostream& err) {
  const HashSpec hash{g.hash, std::nullopt};
  try {
    validate(hash);
  } catch (const InvalidArgument& e) {
    throw Exit{kUsage, e.what()};
  }
  const Basis basis = build_structure(a, err);
  const std::size_t len = digest_length(hash);

  SetupOptions options;
  options.commitments = !a.no_commitments;
  options.execution = a.parallel ? Execution::parallel : Execution::serial;
  if (!a.secret_hex.empty() && !a.secret_passphrase.empty()) {
    throw Exit{kUsage, "--secret-hex and --secret-passphrase are exclusive"};
  }
  if (!a.secret_hex.empty()) {
    Bytes secret;
    try {
      secret = from_hex(a.secret_hex);
    } catch (const FormatError& e) {
      throw Exit{kBadSecret, std::string("secret: ") + e.what()};
    }
    if (secret.size() != len) {
      throw Exit{kBadSecret, "secret must be exactly " + std::to_string(len) + " bytes (" + std::to_string(2 * len) +
                                 " hex characters) for " + hash.algorithm};
    }
    options.fixed_secret = std::move(secret);
  } else if (!a.secret_passphrase.empty()) {
    const std::string& p = a.secret_passphrase;
    options.fixed_secret = hash_bytes(hash, ByteView(reinterpret_cast<const std::uint8_t*>(p.data()), p.size()));
  }

  auto rng = make_rng(g);
  DealerOutput dealt = setup(basis, hash, *rng, options);
  if (options.fixed_secret) secure_wipe(*options.fixed_secret);
  for (const auto& w : dealt.warnings) err << "warning: " << w << "\n";

  storage::ControlAreaFile control{storage::new_scheme_id(*rng), std::move(dealt.public_area)};
  const auto files = write_outputs(a.out_dir, control, dealt.shares);
  report_dealer(g, control, dealt.secret, files, out);

  for (auto& s : dealt.shares) secure_wipe(s.bytes);
  secure_wipe(dealt.secret.bytes);
  return kOk;
}

struct LoadedShares {
  storage::ControlAreaFile control;
  std::vector<Share> shares;
};

LoadedShares load(const std::string& control_path, const std::vector<std::string>& share_paths) {
  LoadedShares loaded{storage::parse_control_area(storage::read_file(control_path)), {}};
  for (const auto& p : share_paths) {
    storage::ShareFile f = storage::parse_share_file(storage::read_file(p));
    storage::check_binding(f, loaded.control);
    loaded.shares.push_back(std::move(f.share));
  }
  std::sort(loaded.shares.begin(), loaded.shares.end(),
            [](const Share& a, const Share& b) { return a.participant < b.participant; });
  for (std::size_t i = 1; i < loaded.shares.size(); ++i) {
    if (loaded.shares[i].participant == loaded.shares[i - 1].participant) {
      throw Exit{kMalformed, "two share files for participant " + std::to_string(loaded.shares[i].participant)};
    }
  }
  return loaded;
}

// Shares of the basis element selected from the supplied participant set.
std::pair<Subset, std::vector<Share>> select_basis_element(const LoadedShares& loaded, std::ostream& err) {
  std::vector<ParticipantId> ids;
  for (const auto& s : loaded.shares) ids.push_back(s.participant);
  const Subset supplied(ids);
  const Subset chosen = reduce_to_basis(supplied, loaded.control.area.basis);
  if (chosen != supplied) {
    err << "note: reduced {" << supplied.key() << "} to basis element {" << chosen.key() << "}\n";
  }
  std::vector<Share> used;
  for (const auto& s : loaded.shares) {
    if (chosen.contains(s.participant)) used.push_back(s);
  }
  return {chosen, std::move(used)};
}

int cmd_recover(const GlobalOptions& g, const std::string& control_path, const std::vector<std::string>& share_paths,
                const std::string& out_file, std::ostream& out, std::ostream& err) {
  LoadedShares loaded = load(control_path, share_paths);
  auto [subset, used] = select_basis_element(loaded, err);
  SecretDigest secret = recover(used, subset, loaded.control.area);
  const std::string hex = to_hex(secret.bytes);
  if (!out_file.empty()) {
    storage::write_file_atomic(out_file, hex + "\n");
  }
  if (g.json) {
    ordered_json j;
    j["subset"] = subset.key();
    j["version"] = loaded.control.area.version;
    j["secret"] = hex;
    out << j.dump(2) << "\n";
  } else {
    out << hex << "\n";
  }
  secure_wipe(secret.bytes);
  for (auto& s : loaded.shares) secure_wipe(s.bytes);
  for (auto& s : used) secure_wipe(s.bytes);
  return kOk;
}

int cmd_refresh(const GlobalOptions& g, const std::string& control_path, const std::vector<std::string>& share_paths,
                std::string out_dir, bool parallel, std::ostream& out, std::ostream& err) {
  LoadedShares loaded = load(control_path, share_paths);
  auto [subset, used] = select_basis_element(loaded, err);
  auto rng = make_rng(g);
  DealerOutput dealt = refresh(loaded.control.area, used, subset, *rng,
                               parallel ? Execution::parallel : Execution::serial);
  storage::ControlAreaFile control{loaded.control.scheme_id, std::move(dealt.public_area)};
  if (out_dir.empty()) out_dir = fs::path(control_path).parent_path().string();
  if (out_dir.empty()) out_dir = ".";
  const auto files = write_outputs(out_dir, control, dealt.shares);
  if (g.json) {
    ordered_json j;
    j["scheme_id"] = control.scheme_id;
    j["version"] = control.area.version;
    j["files"] = ordered_json::array();
    for (const auto& f : files) j["files"].push_back(f.string());
    out << j.dump(2) << "\n";
  } else {
    out << "refreshed to version " << control.area.version << "\n";
  }
  for (auto& s : dealt.shares) secure_wipe(s.bytes);
  secure_wipe(dealt.secret.bytes);
  for (auto& s : loaded.shares) secure_wipe(s.bytes);
  for (auto& s : used) secure_wipe(s.bytes);
  return kOk;
}

int cmd_verify(const GlobalOptions& g, const std::string& control_path, const std::string& share_path,
               std::ostream& out) {
  LoadedShares loaded = load(control_path, {share_path});
  const Share& share = loaded.shares.front();
  bool ok = false;
  try {
    ok = verify_share(share, loaded.control.area);
  } catch (const CommitmentsUnavailable& e) {
    throw Exit{kNoCommitments, e.what()};
  }
  if (g.json) {
    ordered_json j;
    j["participant"] = share.participant;
    j["valid"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "participant " << share.participant << ": " << (ok ? "OK" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// baseline

ordered_json shares_json(const std::vector<shamir::Share>& shares) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : shares) arr.push_back({s.x, s.y});
  return arr;
}

std::vector<shamir::Share> parse_shamir_shares(const std::string& text) {
  std::vector<shamir::Share> out;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw Exit{kUsage, "--shares must be a JSON array of [x, y] pairs"};
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
        throw Exit{kUsage, "--shares must be a JSON array of [x, y] pairs"};
      }
      out.push_back({pair[0].get<std::uint64_t>(), pair[1].get<std::uint64_t>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Exit{kUsage, std::string("--shares: ") + e.what()};
  }
  return out;
}

struct BaselineArgs {
  std::uint64_t q = 0;
  unsigned t = 0;
  unsigned n = 0;
  std::uint64_t secret = 0;
  std::string shares;
  std::string coefficients;
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  std::string commitments;
  std::string share;
};

void print_sharing(const shamir::Sharing& s, unsigned n, std::ostream& out) {
  ordered_json j;
  j["q"] = s.polynomial.field.modulus();
  j["t"] = s.polynomial.degree_bound();
  j["n"] = n;
  j["coefficients"] = s.polynomial.coefficients;
  j["shares"] = shares_json(s.shares);
  out << j.dump() << "\n";
}

shamir::Polynomial polynomial_from(const BaselineArgs& a) {
  const shamir::PrimeField field(a.q);
  if (a.coefficients.empty()) throw Exit{kUsage, "--coefficients is required"};
  return shamir::Polynomial{field, parse_u64_list(a.coefficients, "--coefficients")};
}

int cmd_baseline(const std::string& which, const GlobalOptions& g, const BaselineArgs& a, std::ostream& out) {
  if (which == "split") {
    auto rng = make_rng(g);
    const auto sharing = shamir::split(a.secret, a.t, a.n, shamir::PrimeField(a.q), *rng);
    print_sharing(sharing, a.n, out);
    return kOk;
  }
  if (which == "recover") {
    const auto shares = parse_shamir_shares(a.shares);
    out << shamir::recover(shares, a.t, shamir::PrimeField(a.q)) << "\n";
    return kOk;
  }
  if (which == "renew") {
    auto rng = make_rng(g);
    const auto renewed = shamir::renew(polynomial_from(a), a.n, *rng);
    print_sharing(renewed, a.n, out);
    return kOk;
  }
  const shamir::FeldmanParams params(a.p, a.q, a.g);
  if (which == "commit") {
    ordered_json j;
    j["p"] = params.p();
    j["q"] = params.q();
    j["g"] = params.g();
    j["commitments"] = shamir::feldman_commit(polynomial_from(a), params);
    out << j.dump() << "\n";
    return kOk;
  }
  // verify
  const auto commitments = parse_u64_list(a.commitments, "--commitments");
  const auto xy = parse_u64_list(a.share, "--share");
  if (xy.size() != 2) throw Exit{kUsage, "--share expects x,y"};
  const bool ok = shamir::feldman_verify({xy[0], xy[1]}, commitments, params);
  out << (ok ? "OK" : "FAIL") << "\n";
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// demo

struct DemoArgs {
  unsigned u = 16;
  unsigned b = 3;
  std::size_t w = 4;
  std::uint32_t iv = 0;
  std::string prefix;
  std::string prefix_file;
  bool parallel = false;
};

ordered_json pair_json(const CollisionPair& p, unsigned u) {
  ordered_json j;
  j["chaining_in"] = hex_width(p.chaining_in, u);
  j["block_a"] = hex_width(p.block_a, 64);
  j["block_b"] = hex_width(p.block_b, 64);
  j["chaining_out"] = hex_width(p.chaining_out, u);
  return j;
}

ordered_json blocks_json(const std::vector<std::uint64_t>& blocks) {
  ordered_json arr = ordered_json::array();
  for (auto b : blocks) arr.push_back(hex_width(b, 64));
  return arr;
}

ordered_json diamond_json(const DiamondStructure& d, unsigned u) {
  ordered_json j;
  j["width"] = d.width();
  j["levels"] = ordered_json::array();
  for (const auto& level : d.levels) {
    ordered_json l = ordered_json::array();
    for (auto v : level) l.push_back(hex_width(v, u));
    j["levels"].push_back(l);
  }
  j["links"] = ordered_json::array();
  for (const auto& level : d.links) j["links"].push_back(blocks_json(level));
  j["final_hash"] = hex_width(d.final_hash(), u);
  j["compression_calls"] = d.calls;
  return j;
}

bool diamond_paths_verify(const DiamondStructure& d, const TruncatedIterativeHash& hash) {
  for (std::size_t leaf = 0; leaf < d.width(); ++leaf) {
    if (hash.iterate(d.levels.front()[leaf], d.suffix(leaf)) != d.final_hash()) return false;
  }
  return true;
}

int cmd_demo(const std::string& which, const GlobalOptions& g, const DemoArgs& a, std::ostream& out) {
  const TruncatedIterativeHash hash(a.u, a.iv, HashSpec{g.hash, std::nullopt});
  auto rng = make_rng(g);
  ordered_json report;
  report["demo"] = which;
  report["u"] = a.u;
  report["block_bits"] = TruncatedIterativeHash::kBlockBits;
  std::ostringstream summary;
  bool verified = true;

  if (which == "collide") {
    const auto r = find_collision(hash.iv(), hash, *rng);
    verified = hash.compress(r.pair.chaining_in, r.pair.block_a) == r.pair.chaining_out &&
               hash.compress(r.pair.chaining_in, r.pair.block_b) == r.pair.chaining_out &&
               r.pair.block_a != r.pair.block_b;
    report["pair"] = pair_json(r.pair, a.u);
    report["compression_calls"] = r.calls;
    report["expected_order"] = std::uint64_t{1} << (a.u / 2);
    summary << "collision after " << r.calls << " compression calls (2^(u/2) = " << (1u << (a.u / 2)) << ")\n"
            << "  C(" << hex_width(r.pair.chaining_in, a.u) << ", " << hex_width(r.pair.block_a, 64) << ") = C("
            << hex_width(r.pair.chaining_in, a.u) << ", " << hex_width(r.pair.block_b, 64)
            << ") = " << hex_width(r.pair.chaining_out, a.u) << "\n";
  } else if (which == "multicollision") {
    const Multicollision mc = build_multicollision(a.b, hash, *rng);
    report["b"] = a.b;
    report["pairs"] = ordered_json::array();
    for (const auto& p : mc.pairs()) report["pairs"].push_back(pair_json(p, a.u));
    ordered_json messages = ordered_json::array();
    std::vector<std::uint32_t> hashes;
    for (std::uint64_t i = 0; i < mc.message_count(); ++i) {
      const auto m = mc.message(i);
      hashes.push_back(hash.hash(m));
      if (i < 1024) messages.push_back(blocks_json(m));
    }
    std::sort(hashes.begin(), hashes.end());
    hashes.erase(std::unique(hashes.begin(), hashes.end()), hashes.end());
    verified = hashes.size() == 1 && hashes.front() == mc.final_hash();
    report["message_count"] = mc.message_count();
    report["messages"] = messages;
    report["distinct_hashes"] = hashes.size();
    report["final_hash"] = hex_width(mc.final_hash(), a.u);
    report["compression_calls"] = mc.calls();
    report["cost_reference"] = std::uint64_t{a.b} << (a.u / 2);
    summary << mc.message_count() << " messages, " << hashes.size() << " distinct hash ("
            << hex_width(mc.final_hash(), a.u) << "), " << mc.calls() << " compression calls (b*2^(u/2) = "
            << (std::uint64_t{a.b} << (a.u / 2)) << ")\n";
  } else if (which == "diamond") {
    const DiamondStructure d = build_diamond(a.w, hash, *rng);
    verified = diamond_paths_verify(d, hash);
    report["diamond"] = diamond_json(d, a.u);
    summary << "diamond of width " << d.width() << ", " << d.level_count() << " levels, final hash "
            << hex_width(d.final_hash(), a.u) << ", " << d.calls << " compression calls\n";
  } else {  // herd
    std::string prefix = a.prefix;
    if (!a.prefix_file.empty()) prefix = storage::read_file(a.prefix_file);
    const DiamondStructure d = build_diamond(a.w, hash, *rng);
    const HerdedMessage m =
        herd_prefix(ByteView(reinterpret_cast<const std::uint8_t*>(prefix.data()), prefix.size()), d, hash, *rng,
                    a.parallel ? Execution::parallel : Execution::serial);
    const std::uint32_t replay = hash.hash(m.blocks());
    verified = diamond_paths_verify(d, hash) && replay == d.final_hash();
    report["diamond"] = diamond_json(d, a.u);
    report["prefix_hex"] = to_hex(m.prefix);
    report["prefix_blocks"] = blocks_json(m.prefix_blocks);
    report["linking_block"] = hex_width(m.linking_block, 64);
    report["leaf"] = m.leaf;
    report["suffix"] = blocks_json(m.suffix);
    report["linking_trials"] = m.trials;
    report["expected_trials"] = (std::uint64_t{1} << a.u) / a.w;
    report["replayed_hash"] = hex_width(replay, a.u);
    summary << "committed hash " << hex_width(d.final_hash(), a.u) << "; prefix of " << m.prefix.size()
            << " bytes linked to leaf " << m.leaf << " after " << m.trials << " trials (2^u/w = "
            << (std::uint64_t{1} << a.u) / a.w << ")\n"
            << "  M* = " << hex_width(m.linking_block, 64) << ", suffix of " << m.suffix.size() << " blocks\n"
            << "  replayed hash " << hex_width(replay, a.u) << "\n";
  }
  report["verified"] = verified;
  if (g.json) {
    out << report.dump(2) << "\n";
  } else {
    out << summary.str() << "verification " << (verified ? "OK" : "FAILED") << "\n";
  }
  return verified ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hash-based secret sharing for general access structures", "hss"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--hash", g.hash, "Hash algorithm: sha256, sha512, sha3-256, blake2b512");
  app.add_option("--seed", g.seed, "Deterministic seed (test fixtures only)");
  app.add_flag("--json", g.json, "Machine-readable output");

  SetupArgs setup_args;
  auto* setup_cmd = app.add_subcommand("setup", "Deal shares and write the public control area");
  setup_cmd->add_option("--basis", setup_args.basis_file, "JSON file with minimal authorized subsets");
  setup_cmd->add_option("--threshold", setup_args.threshold, "t+1,n");
  setup_cmd->add_option("--hierarchical", setup_args.hierarchical, "Levels, e.g. 1,2|3,4|5,6");
  setup_cmd->add_option("--k", setup_args.k, "Cumulative level thresholds, e.g. 1,2,3");
  setup_cmd->add_flag("--disjunctive", setup_args.disjunctive, "Any level condition suffices");
  setup_cmd->add_option("--compartment", setup_args.compartment, "Compartments, e.g. 1,2|3,4|5,6");
  setup_cmd->add_option("--ti", setup_args.ti, "Per-compartment thresholds");
  setup_cmd->add_option("--t", setup_args.t, "Overall threshold");
  setup_cmd->add_option("--n", setup_args.n, "Participant count (defaults to the largest id)");
  setup_cmd->add_option("--secret-hex", setup_args.secret_hex, "Fixed secret, digest-length hex");
  setup_cmd->add_option("--secret-passphrase", setup_args.secret_passphrase, "Secret derived by hashing a passphrase");
  setup_cmd->add_flag("--no-commitments", setup_args.no_commitments, "Do not publish share commitments");
  setup_cmd->add_flag("--parallel", setup_args.parallel, "Hash control values with OpenMP");
  setup_cmd->add_option("--out-dir", setup_args.out_dir, "Directory for control.json and share files");

  std::string control_path;
  std::vector<std::string> share_paths;
  std::string out_file;
  auto* recover_cmd = app.add_subcommand("recover", "Recover the secret from share files");
  recover_cmd->add_option("--control", control_path, "Control area file")->required();
  recover_cmd->add_option("shares", share_paths, "Share files")->required();
  recover_cmd->add_option("--out", out_file, "Also write the secret to this file");

  std::string refresh_out_dir;
  bool refresh_parallel = false;
  auto* refresh_cmd = app.add_subcommand("refresh", "Re-deal shares for the same secret");
  refresh_cmd->add_option("--control", control_path, "Control area file")->required();
  refresh_cmd->add_option("shares", share_paths, "Share files of an authorized set")->required();
  refresh_cmd->add_option("--out-dir", refresh_out_dir, "Output directory (default: control file's directory)");
  refresh_cmd->add_flag("--parallel", refresh_parallel, "Hash control values with OpenMP");

  std::string verify_share_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a share against its published commitment");
  verify_cmd->add_option("--control", control_path, "Control area file")->required();
  verify_cmd->add_option("share", verify_share_path, "Share file")->required();

  BaselineArgs b;
  auto* baseline_cmd = app.add_subcommand("baseline", "Shamir / Feldman baseline");
  baseline_cmd->require_subcommand(1);
  auto* b_split = baseline_cmd->add_subcommand("split", "Split a field element");
  b_split->add_option("--q", b.q)->required();
  b_split->add_option("--t", b.t)->required();
  b_split->add_option("--n", b.n)->required();
  b_split->add_option("--secret", b.secret)->required();
  auto* b_recover = baseline_cmd->add_subcommand("recover", "Interpolate the secret");
  b_recover->add_option("--q", b.q)->required();
  b_recover->add_option("--t", b.t)->required();
  b_recover->add_option("--shares", b.shares, "JSON array of [x, y]")->required();
  auto* b_renew = baseline_cmd->add_subcommand("renew", "Add a random zero-constant polynomial");
  b_renew->add_option("--q", b.q)->required();
  b_renew->add_option("--n", b.n)->required();
  b_renew->add_option("--coefficients", b.coefficients, "a_0,...,a_t")->required();
  auto* b_commit = baseline_cmd->add_subcommand("commit", "Feldman commitments");
  b_commit->add_option("--p", b.p)->required();
  b_commit->add_option("--q", b.q)->required();
  b_commit->add_option("--g", b.g)->required();
  b_commit->add_option("--coefficients", b.coefficients, "a_0,...,a_t")->required();
  auto* b_verify = baseline_cmd->add_subcommand("verify", "Feldman share check");
  b_verify->add_option("--p", b.p)->required();
  b_verify->add_option("--q", b.q)->required();
  b_verify->add_option("--g", b.g)->required();
  b_verify->add_option("--commitments", b.commitments, "g^a_0,...")->required();
  b_verify->add_option("--share", b.share, "x,y")->required();

  DemoArgs d;
  auto* demo_cmd = app.add_subcommand("demo", "Truncated-hash herding demonstrations");
  demo_cmd->require_subcommand(1);
  auto add_width = [&](CLI::App* c) {
    c->add_option("--u", d.u, "Truncated width in bits (even, 8..32)");
    c->add_option("--iv", d.iv, "Initial chaining value");
  };
  auto* d_collide = demo_cmd->add_subcommand("collide", "One birthday collision");
  add_width(d_collide);
  auto* d_multi = demo_cmd->add_subcommand("multicollision", "Joux multicollision");
  add_width(d_multi);
  d_multi->add_option("--b", d.b, "Number of chained collisions");
  auto* d_diamond = demo_cmd->add_subcommand("diamond", "Build a diamond structure");
  add_width(d_diamond);
  d_diamond->add_option("--w", d.w, "Leaf count (power of two)");
  auto* d_herd = demo_cmd->add_subcommand("herd", "Herd a prefix into a committed hash");
  add_width(d_herd);
  d_herd->add_option("--w", d.w, "Leaf count (power of two)");
  d_herd->add_option("--prefix", d.prefix, "Prefix text");
  d_herd->add_option("--prefix-file", d.prefix_file, "Prefix file");
  d_herd->add_flag("--parallel", d.parallel, "Search linking blocks with OpenMP");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*setup_cmd) return cmd_setup(g, setup_args, out, err);
    if (*recover_cmd) return cmd_recover(g, control_path, share_paths, out_file, out, err);
    if (*refresh_cmd) return cmd_refresh(g, control_path, share_paths, refresh_out_dir, refresh_parallel, out, err);
    if (*verify_cmd) return cmd_verify(g, control_path, verify_share_path, out);
    if (*baseline_cmd) {
      for (const auto* sub : baseline_cmd->get_subcommands()) return cmd_baseline(sub->get_name(), g, b, out);
    }
    if (*demo_cmd) {
      for (const auto* sub : demo_cmd->get_subcommands()) return cmd_demo(sub->get_name(), g, d, out);
    }
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const Unauthorized& e) {
    err << "error: " << e.what() << "\n";
    return kUnauthorized;
  } catch (const VersionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kVersionMismatch;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const CommitmentsUnavailable& e) {
    err << "error: " << e.what() << "\n";
    return kNoCommitments;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hss::cli
