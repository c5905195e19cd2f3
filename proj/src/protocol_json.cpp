#include "zklab/protocol_json.hpp"

#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zklab {

namespace {

using nlohmann::json;

std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

json instances_to_json(const std::vector<Instance>& instances) {
    json arr = json::array();
    for (const auto& inst : instances)
        arr.push_back({{"label", inst.label},
                       {"in_language", inst.in_language},
                       {"witness", inst.witness}});
    return arr;
}

std::vector<Instance> instances_from_json(const json& arr) {
    std::vector<Instance> out;
    for (const auto& j : arr)
        out.push_back({j.at("label").get<std::string>(), j.at("in_language").get<bool>(),
                       j.at("witness").get<std::string>()});
    return out;
}

void require_version(const json& j, const char* expect) {
    if (!j.contains("schema_version"))
        throw std::invalid_argument("protocol json: missing schema_version");
    if (j.at("schema_version").get<std::string>() != expect)
        throw std::invalid_argument("protocol json: unsupported schema_version");
}

}  // namespace

json nizk_to_json(const NizkSpec& spec) {
    json j;
    j["schema_version"] = kNizkSchemaVersion;
    j["name"] = spec.name;
    j["instances"] = instances_to_json(spec.instances);
    j["gen_tape"] = spec.gen_tape.size;
    j["prover_tape"] = spec.prover_tape.size;
    j["sim_tape"] = spec.sim_tape.size;
    j["verifier_tape"] = spec.verifier_tape.size;
    j["proof_alphabet"] = spec.proof_alphabet;

    json gen = json::object();
    std::set<std::string> crs_values;
    for (std::uint64_t t = 0; t < spec.gen_tape.size; ++t) {
        std::string crs = spec.gen(t);
        gen[hex(t)] = crs;
        crs_values.insert(crs);
    }
    j["gen"] = std::move(gen);

    json sim = json::object();
    for (const auto& inst : spec.instances) {
        json per = json::object();
        for (std::uint64_t t = 0; t < spec.sim_tape.size; ++t) {
            auto [crs, proof] = spec.sim(inst, t);
            per[hex(t)] = json::array({crs, proof});
            crs_values.insert(crs);
        }
        sim[inst.label] = std::move(per);
    }
    j["sim"] = std::move(sim);

    json prove = json::object();
    json verify = json::object();
    for (const auto& crs : crs_values) {
        json pv = json::object();
        json vv = json::object();
        for (const auto& inst : spec.instances) {
            json taped = json::object();
            for (std::uint64_t t = 0; t < spec.prover_tape.size; ++t)
                taped[hex(t)] = spec.prove(crs, inst, t);
            pv[inst.label] = std::move(taped);

            json verdicts = json::object();
            for (const auto& proof : spec.proof_alphabet) {
                json bits = json::object();
                for (std::uint64_t v = 0; v < spec.verifier_tape.size; ++v)
                    bits[hex(v)] = spec.verify(crs, inst, proof, v);
                verdicts[proof] = std::move(bits);
            }
            vv[inst.label] = std::move(verdicts);
        }
        prove[crs] = std::move(pv);
        verify[crs] = std::move(vv);
    }
    j["prove"] = std::move(prove);
    j["verify"] = std::move(verify);
    return j;
}

NizkSpec nizk_from_json(const json& j) {
    require_version(j, kNizkSchemaVersion);
    NizkSpec spec;
    spec.name = j.at("name").get<std::string>();
    spec.instances = instances_from_json(j.at("instances"));
    spec.gen_tape = {j.at("gen_tape").get<std::uint64_t>()};
    spec.prover_tape = {j.at("prover_tape").get<std::uint64_t>()};
    spec.sim_tape = {j.at("sim_tape").get<std::uint64_t>()};
    spec.verifier_tape = {j.at("verifier_tape").get<std::uint64_t>()};
    spec.proof_alphabet = j.at("proof_alphabet").get<std::vector<std::string>>();

    auto tables = std::make_shared<json>(j);
    spec.gen = [tables](std::uint64_t t) -> std::string {
        return tables->at("gen").at(hex(t)).get<std::string>();
    };
    spec.prove = [tables](const std::string& crs, const Instance& inst,
                          std::uint64_t t) -> std::string {
        return tables->at("prove").at(crs).at(inst.label).at(hex(t)).get<std::string>();
    };
    spec.verify = [tables](const std::string& crs, const Instance& inst, const std::string& proof,
                           std::uint64_t v) -> bool {
        return tables->at("verify").at(crs).at(inst.label).at(proof).at(hex(v)).get<bool>();
    };
    spec.sim = [tables](const Instance& inst, std::uint64_t t) {
        const auto& pair = tables->at("sim").at(inst.label).at(hex(t));
        return std::make_pair(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    };
    return spec;
}

namespace {

// Honest-prover table rows: every prefix reachable when the honest prover
// plays against all verifier challenge sequences.
void collect_prover_rows(const InteractiveSpec& spec, const Instance& inst, std::uint64_t tape,
                         Transcript& t, json& rows) {
    int next = static_cast<int>(t.size());
    if (next == spec.rounds) return;
    if (spec.owners[next] == Sender::Prover) {
        std::string m = spec.prover_next(inst, t, tape);
        rows[encode_transcript(t)] = m;
        t.push_back({next + 1, Sender::Prover, m});
        collect_prover_rows(spec, inst, tape, t, rows);
        t.pop_back();
    } else {
        for (std::uint64_t c = 0; c < spec.challenge_space[next]; ++c) {
            t.push_back({next + 1, Sender::Verifier, InteractiveSpec::challenge_token(c)});
            collect_prover_rows(spec, inst, tape, t, rows);
            t.pop_back();
        }
    }
}

void collect_accept_rows(const InteractiveSpec& spec, const Instance& inst, Transcript& t,
                         json& rows) {
    int next = static_cast<int>(t.size());
    if (next == spec.rounds) {
        rows[encode_transcript(t)] = spec.accept(inst, t);
        return;
    }
    if (spec.owners[next] == Sender::Prover) {
        for (const auto& m : spec.prover_alphabet[next]) {
            t.push_back({next + 1, Sender::Prover, m});
            collect_accept_rows(spec, inst, t, rows);
            t.pop_back();
        }
    } else {
        for (std::uint64_t c = 0; c < spec.challenge_space[next]; ++c) {
            t.push_back({next + 1, Sender::Verifier, InteractiveSpec::challenge_token(c)});
            collect_accept_rows(spec, inst, t, rows);
            t.pop_back();
        }
    }
}

}  // namespace

json interactive_to_json(const InteractiveSpec& spec) {
    json j;
    j["schema_version"] = kInteractiveSchemaVersion;
    j["name"] = spec.name;
    j["rounds"] = spec.rounds;
    json owners = json::array();
    for (auto o : spec.owners) owners.push_back(o == Sender::Prover ? "P" : "V");
    j["owners"] = std::move(owners);
    j["prover_alphabet"] = spec.prover_alphabet;
    j["challenge_space"] = spec.challenge_space;
    j["prover_tape"] = spec.prover_tape.size;
    j["sim_tape"] = spec.sim_tape.size;
    j["instances"] = instances_to_json(spec.instances);

    json prover = json::object();
    json accept = json::object();
    json sim = json::object();
    for (const auto& inst : spec.instances) {
        json rows = json::object();
        for (std::uint64_t tape = 0; tape < spec.prover_tape.size; ++tape) {
            json per_tape = json::object();
            Transcript t;
            collect_prover_rows(spec, inst, tape, t, per_tape);
            rows[hex(tape)] = std::move(per_tape);
        }
        prover[inst.label] = std::move(rows);

        json acc_rows = json::object();
        Transcript t;
        collect_accept_rows(spec, inst, t, acc_rows);
        accept[inst.label] = std::move(acc_rows);

        json sim_rows = json::object();
        for (std::uint64_t tape = 0; tape < spec.sim_tape.size; ++tape) {
            json toks = json::array();
            for (const auto& m : spec.sim(inst, tape)) toks.push_back(m.token);
            sim_rows[hex(tape)] = std::move(toks);
        }
        sim[inst.label] = std::move(sim_rows);
    }
    j["prover"] = std::move(prover);
    j["accept"] = std::move(accept);
    j["sim"] = std::move(sim);
    return j;
}

InteractiveSpec interactive_from_json(const json& j) {
    require_version(j, kInteractiveSchemaVersion);
    InteractiveSpec spec;
    spec.name = j.at("name").get<std::string>();
    spec.rounds = j.at("rounds").get<int>();
    for (const auto& o : j.at("owners"))
        spec.owners.push_back(o.get<std::string>() == "P" ? Sender::Prover : Sender::Verifier);
    spec.prover_alphabet = j.at("prover_alphabet").get<std::vector<std::vector<std::string>>>();
    spec.challenge_space = j.at("challenge_space").get<std::vector<std::uint64_t>>();
    spec.prover_tape = {j.at("prover_tape").get<std::uint64_t>()};
    spec.sim_tape = {j.at("sim_tape").get<std::uint64_t>()};
    spec.instances = instances_from_json(j.at("instances"));

    auto tables = std::make_shared<json>(j);
    auto owners = spec.owners;
    spec.prover_next = [tables](const Instance& inst, const Transcript& t,
                                std::uint64_t tape) -> std::string {
        return tables->at("prover")
            .at(inst.label)
            .at(hex(tape))
            .at(encode_transcript(t))
            .get<std::string>();
    };
    spec.accept = [tables](const Instance& inst, const Transcript& t) -> bool {
        return tables->at("accept").at(inst.label).at(encode_transcript(t)).get<bool>();
    };
    spec.sim = [tables, owners](const Instance& inst, std::uint64_t tape) -> Transcript {
        const auto& toks = tables->at("sim").at(inst.label).at(hex(tape));
        Transcript t;
        int r = 0;
        for (const auto& tok : toks) {
            t.push_back({r + 1, owners[r], tok.get<std::string>()});
            ++r;
        }
        return t;
    };
    spec.validate();
    return spec;
}

}  // namespace zklab
