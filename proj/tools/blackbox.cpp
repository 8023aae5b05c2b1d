#include "blackbox.hpp"

#include <cerrno>
#include <chrono>
#include <cmath>
#include <csignal>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <vector>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace sboc::tools {

namespace {

using Clock = std::chrono::steady_clock;

std::string format_coordinates(const Eigen::VectorXd& x) {
    std::string line;
    char buffer[64];
    for (Eigen::Index d = 0; d < x.size(); ++d) {
        std::snprintf(buffer, sizeof(buffer), d == 0 ? "%.17g" : " %.17g", x[d]);
        line += buffer;
    }
    return line;
}

/// Parses exactly one finite real out of `text` (ignoring surrounding
/// whitespace); throws NonNumericOutput otherwise.
double parse_single_real(const std::string& text, const std::string& executable) {
    std::istringstream stream(text);
    double value = 0.0;
    std::string extra;
    if (!(stream >> value) || (stream >> extra)) {
        throw NonNumericOutput("expected exactly one real from " + executable + ", got: \"" +
                               text + "\"");
    }
    if (!std::isfinite(value)) {
        throw NonNumericOutput("non-finite value from " + executable + ": \"" + text + "\"");
    }
    return value;
}

int remaining_ms(Clock::time_point deadline) {
    const auto left =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
    return left > 0 ? static_cast<int>(left) : 0;
}

void kill_and_reap(int pid) {
    ::kill(pid, SIGKILL);
    int status = 0;
    ::waitpid(pid, &status, 0);
}

}  // namespace

BlackBoxEvaluator::BlackBoxEvaluator(std::string executable, BlackBoxOptions options)
    : executable_(std::move(executable)), options_(options) {
    // A dying child must surface as a protocol error, not kill this process.
    std::signal(SIGPIPE, SIG_IGN);
}

BlackBoxEvaluator::~BlackBoxEvaluator() { stop_child(); }

double BlackBoxEvaluator::evaluate(const Eigen::VectorXd& x_raw) {
    const double value = options_.mode == InvocationMode::PerCall
                             ? evaluate_per_call(x_raw)
                             : evaluate_persistent(x_raw);
    ++calls_;
    return value;
}

double BlackBoxEvaluator::evaluate_per_call(const Eigen::VectorXd& x_raw) {
    int out_pipe[2];
    if (::pipe(out_pipe) != 0) throw ObjectiveFailure("pipe() failed");

    const int pid = ::fork();
    if (pid < 0) {
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        throw ObjectiveFailure("fork() failed");
    }
    if (pid == 0) {
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        std::vector<std::string> args;
        args.push_back(executable_);
        char buffer[64];
        for (Eigen::Index d = 0; d < x_raw.size(); ++d) {
            std::snprintf(buffer, sizeof(buffer), "%.17g", x_raw[d]);
            args.emplace_back(buffer);
        }
        std::vector<char*> argv;
        for (auto& arg : args) argv.push_back(arg.data());
        argv.push_back(nullptr);
        ::execv(executable_.c_str(), argv.data());
        _exit(127);
    }

    ::close(out_pipe[1]);
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options_.timeout_seconds));
    std::string output;
    char chunk[512];
    bool timed_out = false;
    for (;;) {
        struct pollfd pfd{out_pipe[0], POLLIN, 0};
        const int ready = ::poll(&pfd, 1, remaining_ms(deadline));
        if (ready == 0) {
            timed_out = true;
            break;
        }
        if (ready < 0) {
            if (errno == EINTR) continue;
            break;
        }
        const ssize_t n = ::read(out_pipe[0], chunk, sizeof(chunk));
        if (n > 0) {
            output.append(chunk, static_cast<std::size_t>(n));
        } else {
            break;  // EOF (or unrecoverable error)
        }
    }
    ::close(out_pipe[0]);

    if (timed_out) {
        kill_and_reap(pid);
        throw Timeout(executable_ + " exceeded the evaluation timeout");
    }
    int status = 0;
    ::waitpid(pid, &status, 0);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        throw NonZeroExit(executable_ + " exited abnormally; output: \"" + output + "\"");
    }
    return parse_single_real(output, executable_);
}

void BlackBoxEvaluator::ensure_child() {
    if (child_pid_ >= 0) return;
    int in_pipe[2];   // parent -> child
    int out_pipe[2];  // child -> parent
    if (::pipe(in_pipe) != 0) throw ObjectiveFailure("pipe() failed");
    if (::pipe(out_pipe) != 0) {
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        throw ObjectiveFailure("pipe() failed");
    }

    const int pid = ::fork();
    if (pid < 0) {
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
        throw ObjectiveFailure("fork() failed");
    }
    if (pid == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
        char* argv[] = {executable_.data(), nullptr};
        ::execv(executable_.c_str(), argv);
        _exit(127);
    }

    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    child_pid_ = pid;
    child_stdin_ = in_pipe[1];
    child_stdout_ = out_pipe[0];
    pending_.clear();
}

void BlackBoxEvaluator::stop_child() {
    if (child_pid_ < 0) return;
    ::close(child_stdin_);
    ::close(child_stdout_);
    // Give the child a moment to exit on EOF, then force it.
    int status = 0;
    for (int i = 0; i < 50; ++i) {
        if (::waitpid(child_pid_, &status, WNOHANG) != 0) {
            child_pid_ = -1;
            break;
        }
        ::usleep(10000);
    }
    if (child_pid_ >= 0) kill_and_reap(child_pid_);
    child_pid_ = -1;
    child_stdin_ = -1;
    child_stdout_ = -1;
}

double BlackBoxEvaluator::evaluate_persistent(const Eigen::VectorXd& x_raw) {
    ensure_child();
    const std::string line = format_coordinates(x_raw) + "\n";
    ssize_t written = 0;
    while (written < static_cast<ssize_t>(line.size())) {
        const ssize_t n =
            ::write(child_stdin_, line.data() + written, line.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            stop_child();
            throw NonZeroExit(executable_ + " died before accepting input");
        }
        written += n;
    }

    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options_.timeout_seconds));
    char chunk[512];
    for (;;) {
        const auto newline = pending_.find('\n');
        if (newline != std::string::npos) {
            const std::string answer = pending_.substr(0, newline);
            pending_.erase(0, newline + 1);
            return parse_single_real(answer, executable_);
        }
        struct pollfd pfd{child_stdout_, POLLIN, 0};
        const int ready = ::poll(&pfd, 1, remaining_ms(deadline));
        if (ready == 0) {
            stop_child();
            throw Timeout(executable_ + " exceeded the evaluation timeout");
        }
        if (ready < 0) {
            if (errno == EINTR) continue;
            stop_child();
            throw ObjectiveFailure("poll() failed on " + executable_);
        }
        const ssize_t n = ::read(child_stdout_, chunk, sizeof(chunk));
        if (n <= 0) {
            stop_child();
            throw NonZeroExit(executable_ + " closed its output mid-protocol");
        }
        pending_.append(chunk, static_cast<std::size_t>(n));
    }
}

}  // namespace sboc::tools
