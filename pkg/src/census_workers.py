""" пул процессов-вычислителей для параллельного перечисления нормальных форм """
from multiprocessing import Process, Queue
from queue import Empty
from typing import Dict, List, Optional, Sequence

from src.census import first_letter_stats
from src.component import LoggedComponent
from src.config import CENSUS_RESULTS_QUEUE_NAME, CENSUS_TASKS_QUEUE_NAME, \
    DEFAULT_LOG_LEVEL, LOG_DEBUG, LOG_ERROR, LOG_INFO, WORKER_POLL_TIMEOUT
from src.errors import BadParameter, WorkerDied
from src.event_types import CensusResult, CensusTask, ControlEvent


class QueuesDirectory(LoggedComponent):
    """ каталог очередей сообщений """
    log_prefix = "[ОЧЕРЕДИ]"

    def __init__(self, log_level=DEFAULT_LOG_LEVEL):
        self.log_level = log_level
        # словарь с очередями по именам
        self.queues: Dict[str, Queue] = {}

    def register(self, queue: Queue, name: str):
        """register регистрация очереди с заданным именем

        Args:
            queue (Queue): очередь
            name (str): имя
        """
        self._log_message(LOG_DEBUG, f"регистрируем очередь {name}")
        self.queues[name] = queue

    def get_queue(self, name: str) -> Queue:
        """get_queue выдаёт из каталога очередь с указанным именем

        Raises:
            BadParameter: такой очереди нет
        """
        try:
            return self.queues[name]
        except KeyError as e:
            self._log_message(LOG_ERROR, f"очередь не найдена {e}")
            raise BadParameter(f"нет очереди {name}") from e


class CensusWorker(Process, LoggedComponent):
    """ вычислитель: берёт задания из общей очереди и кладёт ответы в очередь результатов """
    log_prefix = "[ВЫЧИСЛИТЕЛЬ]"

    def __init__(self, queues_dir: QueuesDirectory, worker_name: str,
                 log_level=DEFAULT_LOG_LEVEL):
        # вызываем конструктор базового класса
        super().__init__()
        self._queues_dir = queues_dir
        self._worker_name = worker_name
        self._quit = False
        # очередь управляющих команд
        self._control_q = Queue()
        self.log_level = log_level

    def stop(self):
        """ запрос остановки работы """
        self._control_q.put(ControlEvent(operation='stop'))

    # проверка наличия новых управляющих команд
    def _check_control_q(self):
        try:
            request: ControlEvent = self._control_q.get_nowait()
            if isinstance(request, ControlEvent) and request.operation == 'stop':
                self._quit = True
        except Empty:
            pass

    def _handle(self, task: CensusTask) -> CensusResult:
        try:
            stats = first_letter_stats(task.n, task.d, task.mode, task.first)
            return CensusResult(task.task_id, self._worker_name, stats)
        except Exception as e:  # pylint: disable=broad-except
            self._log_message(LOG_ERROR, f"ошибка задания {task.task_id}: {e}")
            return CensusResult(task.task_id, self._worker_name, error=e)

    def run(self):
        self._log_message(LOG_INFO, f"старт {self._worker_name}")
        tasks_q = self._queues_dir.get_queue(CENSUS_TASKS_QUEUE_NAME)
        results_q = self._queues_dir.get_queue(CENSUS_RESULTS_QUEUE_NAME)
        while self._quit is False:
            try:
                task = tasks_q.get(timeout=WORKER_POLL_TIMEOUT)
                if isinstance(task, CensusTask):
                    results_q.put(self._handle(task))
            except Empty:
                pass
            self._check_control_q()


class WorkerPool(LoggedComponent):
    """ групповое управление вычислителями переписи """
    log_prefix = "[ПУЛ]"

    def __init__(self, workers: int, log_level=DEFAULT_LOG_LEVEL):
        if workers < 1:
            raise BadParameter("число вычислителей должно быть положительным")
        self.log_level = log_level
        self._queues_dir = QueuesDirectory(log_level)
        self._queues_dir.register(Queue(), CENSUS_TASKS_QUEUE_NAME)
        self._queues_dir.register(Queue(), CENSUS_RESULTS_QUEUE_NAME)
        self._workers: List[CensusWorker] = [
            CensusWorker(self._queues_dir, f"census-{i}", log_level) for i in range(workers)]

    def start(self):
        """ запуск всех вычислителей """
        for worker in self._workers:
            self._log_message(LOG_INFO, f"запуск {worker.name}")
            worker.start()

    def stop(self):
        """ остановка всех вычислителей """
        for worker in self._workers:
            worker.stop()
        for worker in self._workers:
            worker.join()
        self._log_message(LOG_INFO, "вычислители остановлены")

    def _check_workers(self):
        dead = [worker.name for worker in self._workers if not worker.is_alive()]
        if dead:
            self._log_message(LOG_ERROR, f"вычислители завершились без ответа: {dead}")
            raise WorkerDied(f"вычислители завершились без ответа: {', '.join(dead)}")

    def map_first_letters(self, n: int, d: int, mode: Optional[str],
                          firsts: Sequence[int]) -> List[Dict[str, int]]:
        """map_first_letters счётчики first_letter_stats по первым буквам

        Args:
            n (int): параметр графа
            d (int): бюджет длины
            mode (Optional[str]): режим нормальных форм
            firsts (Sequence[int]): первые буквы

        Raises:
            Exception: ошибка, возникшая в вычислителе
            WorkerDied: вычислитель завершился до отправки ответа

        Returns:
            List[Dict[str, int]]: счётчики в порядке firsts
        """
        tasks_q = self._queues_dir.get_queue(CENSUS_TASKS_QUEUE_NAME)
        results_q = self._queues_dir.get_queue(CENSUS_RESULTS_QUEUE_NAME)
        self.start()
        try:
            for task_id, first in enumerate(firsts):
                tasks_q.put(CensusTask(task_id, n, d, mode, first))
            results: Dict[int, CensusResult] = {}
            while len(results) < len(firsts):
                try:
                    result: CensusResult = results_q.get(timeout=WORKER_POLL_TIMEOUT)
                except Empty:
                    self._check_workers()
                    continue
                self._log_message(LOG_DEBUG,
                                  f"ответ {result.task_id} от {result.source}")
                results[result.task_id] = result
        finally:
            self.stop()
        for result in results.values():
            if result.error is not None:
                raise result.error
        return [results[i].stats for i in range(len(firsts))]
