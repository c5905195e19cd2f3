#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zklab/dist.hpp"
#include "zklab/rat.hpp"

namespace zklab {

struct Instance {
    std::string label;
    bool in_language = false;
    std::string witness;  // empty when not in the language
};

// Uniform randomness domain [0, size). Sizes need not be powers of two;
// the budget below corresponds to the "20 bits per tape" enumeration cap.
struct TapeSpace {
    std::uint64_t size = 1;
};

inline constexpr std::uint64_t kTapeBudget = 1u << 20;

enum class Sender { Prover, Verifier };

struct Message {
    int round = 0;  // 1-based
    Sender sender = Sender::Prover;
    std::string token;

    bool operator==(const Message&) const = default;
};

using Transcript = std::vector<Message>;

std::string encode_transcript(const Transcript& t);
// Inverse of encode_transcript given the per-round senders; the encoded
// string may be any prefix of a full transcript.
Transcript decode_transcript(const std::vector<Sender>& owners, const std::string& enc);

struct ErrorProfile {
    Rat eps_c, eps_s, eps_zk;
    std::string mode = "exact";
    std::string notes;
};

// Non-interactive argument over finite tapes. The verifier tape exists only
// to host the paper-prose randomized verifier of the counterexample; every
// spec a decider consumes must have verifier_tape.size == 1.
struct NizkSpec {
    std::string name;
    std::vector<Instance> instances;
    TapeSpace gen_tape, prover_tape, sim_tape, verifier_tape;
    std::vector<std::string> proof_alphabet;

    std::function<std::string(std::uint64_t)> gen;
    std::function<std::string(const std::string& crs, const Instance&, std::uint64_t)> prove;
    std::function<bool(const std::string& crs, const Instance&, const std::string& proof,
                       std::uint64_t vtape)>
        verify;
    std::function<std::pair<std::string, std::string>(const Instance&, std::uint64_t)> sim;

    const Instance& instance(const std::string& label) const;
    bool deterministic_verifier() const { return verifier_tape.size == 1; }

    // Exact enumerations.
    Dist<std::string> gen_dist() const;
    Dist<std::pair<std::string, std::string>> real_pair_dist(const Instance&) const;
    Dist<std::pair<std::string, std::string>> sim_pair_dist(const Instance&) const;
    // Acceptance probability of a fixed (crs, proof) over the verifier tape.
    Rat verify_prob(const std::string& crs, const Instance&, const std::string& proof) const;
};

// Constant-round public-coin protocol. Verifier messages are fresh uniform
// draws from challenge_space; the verdict is a function of the transcript.
struct InteractiveSpec {
    std::string name;
    int rounds = 0;
    std::vector<Sender> owners;                             // per round
    std::vector<std::vector<std::string>> prover_alphabet;  // per round (prover rounds)
    std::vector<std::uint64_t> challenge_space;             // per round (verifier rounds)
    TapeSpace prover_tape, sim_tape;
    std::vector<Instance> instances;

    std::function<std::string(const Instance&, const Transcript&, std::uint64_t)> prover_next;
    std::function<bool(const Instance&, const Transcript&)> accept;
    std::function<Transcript(const Instance&, std::uint64_t)> sim;

    const Instance& instance(const std::string& label) const;
    void validate() const;

    static std::string challenge_token(std::uint64_t idx) { return std::to_string(idx); }

    Dist<std::string> real_transcript_dist(const Instance&) const;
    Dist<std::string> sim_transcript_dist(const Instance&) const;

    // Optimal unbounded-prover acceptance from a partial transcript
    // (backward induction over the full message alphabets).
    Rat game_value(const Instance&, const Transcript& from) const;
};

enum class SoundnessVariant { Randomized, Derandomized };

// Footnote-style unconditional protocol: the CRS picks always-reject /
// always-accept / witness-in-clear with weights (eps_c, eps_s, eps_zk).
NizkSpec build_trivial_protocol(const Rat& eps_c, const Rat& eps_s, const Rat& eps_zk);

// The barrier construction: Gen outputs bit b (1 w.p. eps_zk), honest proof
// pi = b, simulator outputs (0,0)/(0,1)/(1,0) with weights
// (1-eps_zk, eps_zk-delta, delta). The derandomized variant widens the CRS
// with uniform cells and accepts x not in L exactly on a Gen-mass eps_s set,
// placed inside the simulator-reachable b=0 region first.
NizkSpec build_counterexample(const Rat& eps_zk, const Rat& eps_s, const Rat& delta,
                              SoundnessVariant variant);

// Perfect (0,0,0) NIZK fixture.
NizkSpec build_ideal_nizk();

// Zone-mixture demo protocol with exact target errors; k in {3,5}.
InteractiveSpec build_demo_interactive(int k, const Rat& eps_c, const Rat& eps_s,
                                       const Rat& eps_zk);

ErrorProfile measure_nizk_errors(const NizkSpec& spec);
// Adaptive-soundness flavor: the max over instances moves inside the CRS
// average (measured-only diagnostic).
Rat measure_nizk_adaptive_soundness(const NizkSpec& spec);

ErrorProfile measure_interactive_errors(const InteractiveSpec& spec);

}  // namespace zklab
