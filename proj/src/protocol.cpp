#include "zklab/protocol.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zklab {

namespace {

std::uint64_t checked_tape(const Rat& frac, std::uint64_t size, const char* what) {
    // frac * size must be integral; returns the count.
    Rat scaled = frac * Rat(static_cast<long>(size));
    if (scaled.get_den() != 1)
        throw std::invalid_argument(std::string(what) + ": fraction does not divide tape size");
    return scaled.get_num().get_ui();
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t rat_den_u64(const Rat& q) {
    if (!q.get_den().fits_ulong_p()) throw std::invalid_argument("denominator too large");
    return q.get_den().get_ui();
}

}  // namespace

std::string encode_transcript(const Transcript& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += '/';
        out += t[i].token;
    }
    return out;
}

Transcript decode_transcript(const std::vector<Sender>& owners, const std::string& enc) {
    Transcript t;
    if (enc.empty()) return t;
    std::size_t pos = 0;
    int round = 0;
    while (true) {
        if (round >= static_cast<int>(owners.size()))
            throw std::invalid_argument("decode_transcript: more tokens than rounds");
        std::size_t sep = enc.find('/', pos);
        std::string tok = sep == std::string::npos ? enc.substr(pos) : enc.substr(pos, sep - pos);
        t.push_back({round + 1, owners[round], tok});
        ++round;
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    return t;
}

// ---------------------------------------------------------------------------
// NizkSpec

const Instance& NizkSpec::instance(const std::string& label) const {
    for (const auto& inst : instances)
        if (inst.label == label) return inst;
    throw std::invalid_argument("NizkSpec: unknown instance '" + label + "'");
}

Dist<std::string> NizkSpec::gen_dist() const {
    typename Dist<std::string>::Builder b;
    Rat w = rat(1, static_cast<long>(gen_tape.size));
    for (std::uint64_t t = 0; t < gen_tape.size; ++t) b.add(gen(t), w);
    return b.finish();
}

Dist<std::pair<std::string, std::string>> NizkSpec::real_pair_dist(const Instance& inst) const {
    typename Dist<std::pair<std::string, std::string>>::Builder b;
    Rat w = rat(1, static_cast<long>(gen_tape.size * prover_tape.size));
    for (std::uint64_t g = 0; g < gen_tape.size; ++g) {
        std::string crs = gen(g);
        for (std::uint64_t p = 0; p < prover_tape.size; ++p)
            b.add({crs, prove(crs, inst, p)}, w);
    }
    return b.finish();
}

Dist<std::pair<std::string, std::string>> NizkSpec::sim_pair_dist(const Instance& inst) const {
    typename Dist<std::pair<std::string, std::string>>::Builder b;
    Rat w = rat(1, static_cast<long>(sim_tape.size));
    for (std::uint64_t t = 0; t < sim_tape.size; ++t) b.add(sim(inst, t), w);
    return b.finish();
}

Rat NizkSpec::verify_prob(const std::string& crs, const Instance& inst,
                          const std::string& proof) const {
    std::uint64_t hits = 0;
    for (std::uint64_t v = 0; v < verifier_tape.size; ++v)
        if (verify(crs, inst, proof, v)) ++hits;
    return rat(static_cast<long>(hits), static_cast<long>(verifier_tape.size));
}

ErrorProfile measure_nizk_errors(const NizkSpec& spec) {
    ErrorProfile out;
    out.eps_c = 0;
    out.eps_s = 0;
    out.eps_zk = 0;
    out.notes = "unbounded-prover soundness; zk as exact TV";

    auto crs_law = spec.gen_dist();
    for (const auto& inst : spec.instances) {
        if (inst.in_language) {
            // Completeness: exact rejection probability of the honest pair.
            Rat rej = 0;
            Rat w = rat(1, static_cast<long>(spec.gen_tape.size * spec.prover_tape.size));
            for (std::uint64_t g = 0; g < spec.gen_tape.size; ++g) {
                std::string crs = spec.gen(g);
                for (std::uint64_t p = 0; p < spec.prover_tape.size; ++p)
                    rej += w * (1 - spec.verify_prob(crs, inst, spec.prove(crs, inst, p)));
            }
            out.eps_c = std::max(out.eps_c, rej);
            out.eps_zk = std::max(out.eps_zk,
                                  tv_distance(spec.real_pair_dist(inst), spec.sim_pair_dist(inst)));
        } else {
            // Soundness: best possible proof per CRS.
            Rat acc = 0;
            for (const auto& [crs, w] : crs_law.support()) {
                Rat best = 0;
                for (const auto& proof : spec.proof_alphabet)
                    best = std::max(best, spec.verify_prob(crs, inst, proof));
                acc += w * best;
            }
            out.eps_s = std::max(out.eps_s, acc);
        }
    }
    return out;
}

Rat measure_nizk_adaptive_soundness(const NizkSpec& spec) {
    Rat acc = 0;
    for (const auto& [crs, w] : spec.gen_dist().support()) {
        Rat best = 0;
        for (const auto& inst : spec.instances) {
            if (inst.in_language) continue;
            for (const auto& proof : spec.proof_alphabet)
                best = std::max(best, spec.verify_prob(crs, inst, proof));
        }
        acc += w * best;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// InteractiveSpec

const Instance& InteractiveSpec::instance(const std::string& label) const {
    for (const auto& inst : instances)
        if (inst.label == label) return inst;
    throw std::invalid_argument("InteractiveSpec: unknown instance '" + label + "'");
}

void InteractiveSpec::validate() const {
    if (rounds <= 0 || owners.size() != static_cast<std::size_t>(rounds))
        throw std::invalid_argument("InteractiveSpec: bad round count");
    if (prover_alphabet.size() != owners.size() || challenge_space.size() != owners.size())
        throw std::invalid_argument("InteractiveSpec: per-round tables sized wrong");
    for (int r = 0; r < rounds; ++r) {
        if (r > 0 && owners[r] == owners[r - 1])
            throw std::invalid_argument("InteractiveSpec: senders must alternate");
        if (owners[r] == Sender::Prover && prover_alphabet[r].empty())
            throw std::invalid_argument("InteractiveSpec: empty prover alphabet");
        if (owners[r] == Sender::Verifier && challenge_space[r] == 0)
            throw std::invalid_argument("InteractiveSpec: empty challenge space");
    }
    if (prover_tape.size == 0 || sim_tape.size == 0 ||
        prover_tape.size > kTapeBudget || sim_tape.size > kTapeBudget)
        throw std::invalid_argument("InteractiveSpec: tape outside budget");
}

namespace {

void enumerate_real(const InteractiveSpec& spec, const Instance& inst, std::uint64_t ptape,
                    Transcript& t, const Rat& weight, Dist<std::string>::Builder& out) {
    int next = static_cast<int>(t.size());
    if (next == spec.rounds) {
        out.add(encode_transcript(t), weight);
        return;
    }
    if (spec.owners[next] == Sender::Prover) {
        t.push_back({next + 1, Sender::Prover, spec.prover_next(inst, t, ptape)});
        enumerate_real(spec, inst, ptape, t, weight, out);
        t.pop_back();
    } else {
        Rat w = weight / Rat(static_cast<long>(spec.challenge_space[next]));
        for (std::uint64_t c = 0; c < spec.challenge_space[next]; ++c) {
            t.push_back({next + 1, Sender::Verifier, InteractiveSpec::challenge_token(c)});
            enumerate_real(spec, inst, ptape, t, w, out);
            t.pop_back();
        }
    }
}

}  // namespace

Dist<std::string> InteractiveSpec::real_transcript_dist(const Instance& inst) const {
    Dist<std::string>::Builder b;
    Rat w = rat(1, static_cast<long>(prover_tape.size));
    for (std::uint64_t p = 0; p < prover_tape.size; ++p) {
        Transcript t;
        enumerate_real(*this, inst, p, t, w, b);
    }
    return b.finish();
}

Dist<std::string> InteractiveSpec::sim_transcript_dist(const Instance& inst) const {
    Dist<std::string>::Builder b;
    Rat w = rat(1, static_cast<long>(sim_tape.size));
    for (std::uint64_t t = 0; t < sim_tape.size; ++t)
        b.add(encode_transcript(sim(inst, t)), w);
    return b.finish();
}

Rat InteractiveSpec::game_value(const Instance& inst, const Transcript& from) const {
    int next = static_cast<int>(from.size());
    if (next == rounds) return accept(inst, from) ? Rat(1) : Rat(0);
    Transcript t = from;
    if (owners[next] == Sender::Prover) {
        Rat best = 0;
        for (const auto& m : prover_alphabet[next]) {
            t.push_back({next + 1, Sender::Prover, m});
            best = std::max(best, game_value(inst, t));
            t.pop_back();
        }
        return best;
    }
    Rat sum = 0;
    for (std::uint64_t c = 0; c < challenge_space[next]; ++c) {
        t.push_back({next + 1, Sender::Verifier, challenge_token(c)});
        sum += game_value(inst, t);
        t.pop_back();
    }
    return sum / Rat(static_cast<long>(challenge_space[next]));
}

ErrorProfile measure_interactive_errors(const InteractiveSpec& spec) {
    ErrorProfile out;
    out.eps_c = 0;
    out.eps_s = 0;
    out.eps_zk = 0;
    out.notes = "game-tree soundness; zk as exact transcript TV";

    for (const auto& inst : spec.instances) {
        if (inst.in_language) {
            Rat acc = 0;
            auto real = spec.real_transcript_dist(inst);
            // Verdicts over the real law: re-walk transcripts to apply accept.
            for (const auto& [enc, w] : real.support())
                if (spec.accept(inst, decode_transcript(spec.owners, enc))) acc += w;
            out.eps_c = std::max(out.eps_c, 1 - acc);
            out.eps_zk = std::max(
                out.eps_zk, tv_distance(real, spec.sim_transcript_dist(inst)));
        } else {
            out.eps_s = std::max(out.eps_s, spec.game_value(inst, {}));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constructors

NizkSpec build_trivial_protocol(const Rat& eps_c, const Rat& eps_s, const Rat& eps_zk) {
    if (eps_c < 0 || eps_s < 0 || eps_zk < 0 || eps_c + eps_s + eps_zk != 1)
        throw std::invalid_argument("build_trivial_protocol: errors must be >= 0 and sum to 1");

    NizkSpec spec;
    spec.name = "trivial(" + rat_str(eps_c) + "," + rat_str(eps_s) + "," + rat_str(eps_zk) + ")";
    spec.instances = {{"x+", true, "w"}, {"x-", false, ""}};
    std::uint64_t den = lcm_u64(lcm_u64(rat_den_u64(eps_c), rat_den_u64(eps_s)),
                                rat_den_u64(eps_zk));
    std::uint64_t n_reject = checked_tape(eps_c, den, "trivial eps_c");
    std::uint64_t n_accept = checked_tape(eps_s, den, "trivial eps_s");
    spec.gen_tape = {den};
    spec.prover_tape = {1};
    spec.sim_tape = {den};
    spec.verifier_tape = {1};
    spec.proof_alphabet = {"\xe2\x8a\xa5", "w"};  // junk, witness

    auto branch = [n_reject, n_accept](std::uint64_t t) -> std::string {
        if (t < n_reject) return "R";
        if (t < n_reject + n_accept) return "A";
        return "W";
    };
    spec.gen = branch;
    spec.prove = [](const std::string& crs, const Instance& inst, std::uint64_t) -> std::string {
        return crs == "W" ? inst.witness : "\xe2\x8a\xa5";
    };
    spec.verify = [](const std::string& crs, const Instance& inst, const std::string& proof,
                     std::uint64_t) -> bool {
        if (crs == "R") return false;
        if (crs == "A") return true;
        return inst.in_language && proof == inst.witness;
    };
    spec.sim = [branch](const Instance&, std::uint64_t t) {
        return std::make_pair(branch(t), std::string("\xe2\x8a\xa5"));
    };
    return spec;
}

NizkSpec build_counterexample(const Rat& eps_zk, const Rat& eps_s, const Rat& delta,
                              SoundnessVariant variant) {
    if (!(eps_zk > 0 && eps_zk < 1) || !(eps_s > 0 && eps_s < 1))
        throw std::invalid_argument("build_counterexample: eps_zk, eps_s must lie in (0,1)");
    if (delta < 0 || delta >= eps_zk)
        throw std::invalid_argument("build_counterexample: need 0 <= delta < eps_zk");

    NizkSpec spec;
    spec.instances = {{"x+", true, "w"}, {"x-", false, ""}};
    spec.prover_tape = {1};
    spec.proof_alphabet = {"0", "1"};

    // Simulator branch law (1-eps_zk, eps_zk-delta, delta) over a common
    // denominator V; branch v encodes the (crs-bit, proof) pair.
    Rat w00 = 1 - eps_zk, w01 = eps_zk - delta, w10 = delta;
    std::uint64_t V = lcm_u64(lcm_u64(rat_den_u64(w00), rat_den_u64(w01)), rat_den_u64(w10));
    std::uint64_t v00 = checked_tape(w00, V, "sim 00");
    std::uint64_t v01 = checked_tape(w01, V, "sim 01");
    auto sim_branch = [v00, v01](std::uint64_t v) -> std::pair<char, char> {
        if (v < v00) return {'0', '0'};
        if (v < v00 + v01) return {'0', '1'};
        return {'1', '0'};
    };

    std::uint64_t G = rat_den_u64(eps_zk);
    std::uint64_t g1 = checked_tape(eps_zk, G, "gen eps_zk");

    if (variant == SoundnessVariant::Randomized) {
        spec.name = "counterexample-rand(zk=" + rat_str(eps_zk) + ",s=" + rat_str(eps_s) +
                    ",d=" + rat_str(delta) + ")";
        spec.gen_tape = {G};
        spec.sim_tape = {V};
        spec.verifier_tape = {rat_den_u64(eps_s)};
        std::uint64_t s_num = checked_tape(eps_s, spec.verifier_tape.size, "eps_s");
        spec.gen = [G, g1](std::uint64_t t) -> std::string { return t < G - g1 ? "0" : "1"; };
        spec.prove = [](const std::string& crs, const Instance&, std::uint64_t) { return crs; };
        spec.verify = [s_num](const std::string& crs, const Instance& inst,
                              const std::string& proof, std::uint64_t vt) -> bool {
            if (inst.in_language) return proof == crs;
            return vt < s_num;  // the paper's prose verifier coin
        };
        spec.sim = [sim_branch](const Instance&, std::uint64_t v) {
            auto [b, p] = sim_branch(v);
            return std::make_pair(std::string(1, b), std::string(1, p));
        };
        return spec;
    }

    // Derandomized: crs = "b:u" with u uniform over [U). The x-not-in-L
    // accepting set has Gen-mass exactly eps_s and is packed into the b=0
    // cells first, so the simulator can reach every accepting CRS.
    Rat zero_mass = 1 - eps_zk;
    std::uint64_t U;
    std::uint64_t n0, n1;
    if (eps_s <= zero_mass) {
        Rat frac = eps_s / zero_mass;
        U = rat_den_u64(frac);
        n0 = checked_tape(frac, U, "accept set");
        n1 = 0;
    } else {
        Rat frac = (eps_s - zero_mass) / eps_zk;
        U = rat_den_u64(frac);
        n0 = U;
        n1 = checked_tape(frac, U, "accept set");
    }

    spec.name = "counterexample-derand(zk=" + rat_str(eps_zk) + ",s=" + rat_str(eps_s) +
                ",d=" + rat_str(delta) + ")";
    spec.gen_tape = {G * U};
    spec.sim_tape = {V * U};
    spec.verifier_tape = {1};
    if (spec.gen_tape.size > kTapeBudget || spec.sim_tape.size > kTapeBudget)
        throw std::invalid_argument("build_counterexample: tape budget exceeded");

    auto crs_name = [](char b, std::uint64_t u) {
        return std::string(1, b) + ":" + std::to_string(u);
    };
    spec.gen = [G, g1, U, crs_name](std::uint64_t t) -> std::string {
        std::uint64_t g = t / U, u = t % U;
        return crs_name(g < G - g1 ? '0' : '1', u);
    };
    spec.prove = [](const std::string& crs, const Instance&, std::uint64_t) {
        return std::string(1, crs[0]);
    };
    spec.verify = [n0, n1](const std::string& crs, const Instance& inst,
                           const std::string& proof, std::uint64_t) -> bool {
        char b = crs[0];
        std::uint64_t u = std::stoull(crs.substr(2));
        if (inst.in_language) return proof.size() == 1 && proof[0] == b;
        return b == '0' ? u < n0 : u < n1;
    };
    spec.sim = [sim_branch, U, crs_name](const Instance&, std::uint64_t t) {
        std::uint64_t v = t / U, u = t % U;
        auto [b, p] = sim_branch(v);
        return std::make_pair(crs_name(b, u), std::string(1, p));
    };
    return spec;
}

NizkSpec build_ideal_nizk() {
    NizkSpec spec;
    spec.name = "ideal-nizk";
    spec.instances = {{"x+", true, "w"}, {"x-", false, ""}};
    spec.gen_tape = {1};
    spec.prover_tape = {1};
    spec.sim_tape = {1};
    spec.verifier_tape = {1};
    spec.proof_alphabet = {"ok", "no"};
    spec.gen = [](std::uint64_t) { return std::string("crs"); };
    spec.prove = [](const std::string&, const Instance&, std::uint64_t) { return std::string("ok"); };
    spec.verify = [](const std::string&, const Instance& inst, const std::string& proof,
                     std::uint64_t) { return inst.in_language && proof == "ok"; };
    spec.sim = [](const Instance&, std::uint64_t) {
        return std::make_pair(std::string("crs"), std::string("ok"));
    };
    return spec;
}

InteractiveSpec build_demo_interactive(int k, const Rat& eps_c, const Rat& eps_s,
                                       const Rat& eps_zk) {
    if (k != 3 && k != 5)
        throw std::invalid_argument("build_demo_interactive: k must be 3 or 5");
    if (!is_probability(eps_c) || !is_probability(eps_s) || !is_probability(eps_zk))
        throw std::invalid_argument("build_demo_interactive: errors must lie in [0,1]");

    // Decoy-branch weight beta and witness-zone fraction gamma solve
    // eps_zk = beta + (1-beta)*gamma. A positive beta gives the simulator a
    // rejected branch the optimal prover can avoid; for error sums >= 1 we
    // put everything into the unavoidable witness zone so no decider gap
    // survives.
    Rat beta = 0, gamma = eps_zk;
    if (eps_c + eps_s + eps_zk < 1 && eps_zk > 0) {
        Rat b2 = eps_zk / 2;
        Rat g2 = (eps_zk - b2) / (1 - b2);
        if (g2.get_den().fits_ulong_p() && rat_den_u64(g2) <= 16) {
            beta = b2;
            gamma = g2;
        }
    }
    if (eps_c + gamma > 1)
        throw std::invalid_argument("build_demo_interactive: infeasible targets (eps_c + zone > 1)");

    std::uint64_t M = lcm_u64(lcm_u64(rat_den_u64(eps_c), rat_den_u64(eps_s)), rat_den_u64(gamma));
    while (M < 4) M *= 2;
    if (M > 16)
        throw std::invalid_argument("build_demo_interactive: challenge alphabet exceeds 16");
    std::uint64_t n_rej = checked_tape(eps_c, M, "demo eps_c");
    std::uint64_t n_acc = checked_tape(eps_s, M, "demo eps_s");
    std::uint64_t n_wit = checked_tape(gamma, M, "demo zone");
    std::uint64_t B = std::max<std::uint64_t>(rat_den_u64(beta), 1);
    std::uint64_t n_decoy = checked_tape(beta, B, "demo beta");

    InteractiveSpec spec;
    spec.name = "demo-k" + std::to_string(k) + "(" + rat_str(eps_c) + "," + rat_str(eps_s) +
                "," + rat_str(eps_zk) + ")";
    spec.rounds = k;
    spec.instances = {{"x+", true, "w"}, {"x-", false, ""}};
    spec.prover_tape = {1};

    // The zone challenge is the last verifier round; earlier verifier rounds
    // (k = 5) are pure echo rounds.
    const int zone_round = k - 2;  // 0-based index of the last verifier round

    std::vector<std::string> echo;
    for (std::uint64_t c = 0; c < M; ++c) echo.push_back("e" + std::to_string(c));

    for (int r = 0; r < k; ++r) {
        if (r % 2 == 0) {
            spec.owners.push_back(Sender::Prover);
            spec.challenge_space.push_back(0);
            if (r == 0) {
                spec.prover_alphabet.push_back(beta > 0
                                                   ? std::vector<std::string>{"a0", "a1"}
                                                   : std::vector<std::string>{"a0"});
            } else {
                std::vector<std::string> alpha = echo;
                alpha.push_back("\xe2\x8a\xa5");
                alpha.push_back("w");
                spec.prover_alphabet.push_back(alpha);
            }
        } else {
            spec.owners.push_back(Sender::Verifier);
            spec.prover_alphabet.push_back({});
            spec.challenge_space.push_back(M);
        }
    }

    // Zone layout over the last challenge: [0, n_rej) rejects honest runs,
    // [M - n_wit, M) demands the witness; the x-not-in-L accepting set is
    // the first n_acc challenges (independent of the other zones).
    auto zone_of = [n_rej, n_wit, M](std::uint64_t c) -> char {
        if (c < n_rej) return 'r';
        if (c >= M - n_wit) return 'w';
        return 'p';
    };
    auto parse_challenge = [](const std::string& tok) { return std::stoull(tok); };

    auto honest_response = [zone_of, parse_challenge](const Instance& inst,
                                                      const std::string& ctok) -> std::string {
        std::uint64_t c = parse_challenge(ctok);
        return zone_of(c) == 'w' ? inst.witness : "e" + ctok;
    };

    spec.prover_next = [zone_round, honest_response](const Instance& inst, const Transcript& t,
                                                     std::uint64_t) -> std::string {
        int next = static_cast<int>(t.size());
        if (next == 0) return "a0";
        const std::string& ctok = t.back().token;
        if (next == zone_round + 1) return honest_response(inst, ctok);
        return "e" + ctok;  // early echo rounds (k = 5)
    };

    spec.accept = [zone_round, zone_of, parse_challenge, n_acc](
                      const Instance& inst, const Transcript& t) -> bool {
        std::uint64_t zc = parse_challenge(t[zone_round].token);
        if (!inst.in_language) return zc < n_acc;
        if (t[0].token != "a0") return false;
        for (int r = 2; r < zone_round; r += 2)
            if (t[r].token != "e" + t[r - 1].token) return false;  // echo rounds
        char z = zone_of(zc);
        if (z == 'r') return false;
        const std::string& resp = t[zone_round + 1].token;
        return z == 'w' ? resp == inst.witness : resp == "e" + t[zone_round].token;
    };

    // Sim tape: decoy branch in [0, B), then one uniform draw per verifier
    // round. Responses follow the honest echo rule with the witness replaced
    // by the junk token.
    std::uint64_t sim_size = B;
    for (int r = 0; r < k; ++r)
        if (r % 2 == 1) sim_size *= M;
    spec.sim_tape = {sim_size};

    spec.sim = [k, zone_round, B, M, n_decoy, zone_of](const Instance&,
                                                       std::uint64_t tape) -> Transcript {
        std::uint64_t b = tape % B;
        tape /= B;
        Transcript t;
        t.push_back({1, Sender::Prover, b < n_decoy ? "a1" : "a0"});
        for (int r = 1; r < k; ++r) {
            if (r % 2 == 1) {
                std::uint64_t c = tape % M;
                tape /= M;
                t.push_back({r + 1, Sender::Verifier, std::to_string(c)});
            } else {
                const std::string& ctok = t.back().token;
                std::string resp = "e" + ctok;
                if (r == zone_round + 1 && zone_of(std::stoull(ctok)) == 'w')
                    resp = "\xe2\x8a\xa5";
                t.push_back({r + 1, Sender::Prover, resp});
            }
        }
        return t;
    };

    spec.validate();
    return spec;
}

}  // namespace zklab
