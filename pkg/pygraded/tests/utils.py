import os


def delete_log(log_name='pygraded'):
    if os.path.exists(f'{log_name}.log'):
        os.remove(f'{log_name}.log')
