#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zeck/codec.hpp"
#include "zeck/identity.hpp"
#include "zeck/identity_json.hpp"
#include "zeck/zeckendorf.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;  // verification failure or corrupt data
constexpr int kUsage = 2;   // malformed arguments or input

using nlohmann::json;

std::string reconstruction_line(const zeck::BigInt& n, const zeck::HoleySet& support) {
    std::string line = n.to_string() + " = ";
    if (support.empty()) return line + "0";
    const auto& elements = support.elements();
    for (std::size_t i = elements.size(); i-- > 0;) {
        line += "f_" + std::to_string(elements[i]);
        if (i != 0) line += " + ";
    }
    return line;
}

std::string support_list(const zeck::HoleySet& support) {
    std::string text = "[";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i != 0) text += ", ";
        text += std::to_string(support.elements()[i]);
    }
    return text + "]";
}

int cmd_decompose(const std::string& n_text, const std::string& format) {
    zeck::BigInt n;
    try {
        n = zeck::BigInt::from_decimal(n_text);
    } catch (const std::invalid_argument&) {
        std::cerr << "decompose: '" << n_text << "' is not a decimal integer\n";
        return kUsage;
    }
    if (n.is_negative()) {
        std::cerr << "decompose: input must be nonnegative\n";
        return kUsage;
    }
    zeck::HoleySet support = zeck::zeckendorf_decompose(n).support;
    if (format == "json") {
        json doc{{"n", n.to_string()}, {"support", support.elements()}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << reconstruction_line(n, support) << "\n";
        std::cout << "support: " << support_list(support) << "\n";
    }
    return kOk;
}

json identity_with_rendering(const zeck::Identity& identity, const std::string& rendered) {
    json doc = zeck::identity_to_json(identity);
    doc["rendered"] = rendered;
    return doc;
}

int cmd_identity(const std::vector<std::int64_t>& shifts, const std::string& format) {
    zeck::Identity identity = zeck::universal_shift_set(shifts);
    std::string rendered = zeck::render_identity(identity);
    if (format == "json") {
        std::cout << identity_with_rendering(identity, rendered).dump() << "\n";
    } else {
        std::cout << rendered << "\n";
    }
    return kOk;
}

std::string table_line(int k, const zeck::Identity& identity) {
    return std::to_string(k) + "f_n = " + zeck::render_support_sum(identity.support) +
           " for all n >= " + std::to_string(identity.n_min);
}

int cmd_table(int k_max, const std::string& format) {
    if (k_max < 1) {
        std::cerr << "table: --k-max must be at least 1\n";
        return kUsage;
    }
    auto table = zeck::family_table(k_max);
    if (format == "json") {
        json rows = json::array();
        for (int k = 1; k <= k_max; ++k) {
            json row = identity_with_rendering(table[k - 1], table_line(k, table[k - 1]));
            row["k"] = k;
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << "\n";
    } else {
        for (int k = 1; k <= k_max; ++k) std::cout << table_line(k, table[k - 1]) << "\n";
    }
    return kOk;
}

int cmd_verify(std::int64_t window) {
    if (window < 1) {
        std::cerr << "verify: --window must be at least 1\n";
        return kUsage;
    }
    std::string input(std::istreambuf_iterator<char>(std::cin), {});
    zeck::Identity identity;
    try {
        identity = zeck::identity_from_json(json::parse(input));
    } catch (const json::exception& e) {
        std::cerr << "verify: malformed identity JSON: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kFailed;
    }
    if (!zeck::certify_identity(identity.shifts, identity.support)) {
        std::cout << "certification failed\n";
        return kFailed;
    }
    if (!zeck::verify_range(identity, window)) {
        std::cout << "window check failed\n";
        return kFailed;
    }
    std::cout << "ok: " << zeck::render_identity(identity) << "\n";
    return kOk;
}

int cmd_encode(const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "encode: cannot open " << in_path << "\n";
        return kUsage;
    }
    std::vector<zeck::BigInt> values;
    std::string token;
    while (in >> token) {
        zeck::BigInt value;
        try {
            value = zeck::BigInt::from_decimal(token);
        } catch (const std::invalid_argument&) {
            std::cerr << "encode: '" << token << "' is not a decimal integer\n";
            return kUsage;
        }
        if (value.sign() < 1) {
            std::cerr << "encode: '" << token << "' is not encodable, values must be >= 1\n";
            return kUsage;
        }
        values.push_back(std::move(value));
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "encode: cannot open " << out_path << "\n";
        return kUsage;
    }
    zeck::write_container(out, zeck::encode_stream(values));
    return out ? kOk : kFailed;
}

int cmd_decode(const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        std::cerr << "decode: cannot open " << in_path << "\n";
        return kUsage;
    }
    std::vector<zeck::BigInt> values;
    try {
        values = zeck::decode_stream(zeck::read_container(in));
    } catch (const zeck::DecodeError& e) {
        std::cerr << "decode: " << e.what() << "\n";
        return kFailed;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "decode: cannot open " << out_path << "\n";
        return kUsage;
    }
    for (const zeck::BigInt& value : values) out << value.to_string() << "\n";
    return out ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeckendorf numeration, Fibonacci-shift identities and Fibonacci coding"};
    app.require_subcommand(1);

    std::string decompose_n;
    std::string decompose_format = "text";
    auto* decompose = app.add_subcommand("decompose", "Zeckendorf decomposition of a nonnegative integer");
    decompose->add_option("n", decompose_n, "nonnegative decimal integer")->required();
    decompose->add_option("--format", decompose_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<std::int64_t> identity_shifts;
    std::string identity_format = "text";
    auto* identity = app.add_subcommand("identity", "unique holey support for a family of index shifts");
    identity->add_option("--shift", identity_shifts, "index shift, repeatable");
    identity->add_option("--format", identity_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    int table_k_max = 0;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "multiplier identities k*f_n for k = 1..k_max");
    table->add_option("--k-max", table_k_max, "number of rows")->required();
    table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::int64_t verify_window = 100;
    auto* verify = app.add_subcommand("verify", "check an identity JSON object read from stdin");
    verify->add_option("--window", verify_window, "number of leading indices to check");

    std::string encode_in, encode_out;
    auto* encode = app.add_subcommand("encode", "Fibonacci-code whitespace-separated positive integers");
    encode->add_option("--in", encode_in, "input text file")->required();
    encode->add_option("--out", encode_out, "output container file")->required();

    std::string decode_in, decode_out;
    auto* decode = app.add_subcommand("decode", "decode a Fibonacci-code container to one integer per line");
    decode->add_option("--in", decode_in, "input container file")->required();
    decode->add_option("--out", decode_out, "output text file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(decompose_n, decompose_format);
        if (identity->parsed()) return cmd_identity(identity_shifts, identity_format);
        if (table->parsed()) return cmd_table(table_k_max, table_format);
        if (verify->parsed()) return cmd_verify(verify_window);
        if (encode->parsed()) return cmd_encode(encode_in, encode_out);
        if (decode->parsed()) return cmd_decode(decode_in, decode_out);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
